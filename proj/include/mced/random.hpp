#pragma once

#include <cstdint>
#include <random>

namespace mced {

/// Seeded generator with fully specified output. The engine is the standard
/// 64-bit Mersenne Twister, whose sequence is fixed by the C++ standard; the
/// bounded-integer and real helpers are implemented here rather than taken
/// from <random> distributions, whose results vary between library vendors.
class Rng {
public:
	static constexpr const char *algorithm = "mt19937_64/v1";

	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	std::uint64_t next() { return engine_(); }

	/// Uniform in [0, bound), by rejection; bound must be positive.
	std::uint64_t below(std::uint64_t bound)
	{
		const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
		std::uint64_t x;
		do
			x = next();
		while (x > limit);
		return x % bound;
	}

	/// Uniform in [lo, hi].
	std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

	/// Uniform in [0, 1) with 53 random bits.
	double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

	bool coin(double p) { return unit() < p; }

	template <typename It>
	void shuffle(It first, It last)
	{
		for (auto n = last - first; n > 1; --n)
			std::iter_swap(first + (n - 1), first + static_cast<decltype(n)>(below(static_cast<std::uint64_t>(n))));
	}

private:
	std::mt19937_64 engine_;
};

} // namespace mced
