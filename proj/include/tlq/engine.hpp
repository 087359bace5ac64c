#pragma once

#include <cstdint>
#include <vector>

#include "tlq/model.hpp"
#include "tlq/rng.hpp"

namespace tlq {

// Bernoulli acceptance "draw < thr" on a 64-bit uniform draw. thr is
// floor(p * 2^64); the separate flag keeps p = 1 exact instead of
// saturating at (2^64-1)/2^64.
struct Threshold {
    std::uint64_t thr = 0;
    bool always = false;

    bool accept(std::uint64_t u) const { return always || u < thr; }
};

Threshold bernoulli_threshold(const Rat& p);

// Everything a batch kernel needs, precomputed once per monte_carlo call.
struct KernelConfig {
    Schedule::Kind kind = Schedule::Kind::Blocks;
    std::uint64_t ell = 1;                // blocks
    std::vector<std::uint8_t> pattern;    // pattern; 1 = red
    Threshold arrive;                     // red step, probability p
    Threshold depart;                     // green step, probability q
    // Random lights, one draw per step: +1 iff u < rl_up; 0 iff u in
    // [rl_up, rl_zero); else -1. rl_zero = rl_up + 2^63 wraps to 0 exactly
    // when p = 1, where rl_minus_never takes over.
    std::uint64_t rl_up = 0;
    std::uint64_t rl_zero = 0;
    bool rl_minus_never = false;

    static KernelConfig make(const ModelParams& params, const Schedule& schedule);
};

// Stepwise reference for one run; used verbatim by the scalar batch kernel.
struct RunOutcome {
    std::uint64_t s = 0;  // final queue length
    std::uint64_t m = 0;  // running maximum
};

RunOutcome run_stepwise_scalar(const KernelConfig& cfg, std::uint64_t n, Xoshiro256pp g);

// Batch kernels: simulate `count` independent runs with stream ids
// first_stream .. first_stream+count-1 and write each run's maximum to
// out_max. All kernels produce bit-identical per-run values.
using BatchKernel = void (*)(const KernelConfig& cfg, std::uint64_t n, std::uint64_t seed,
                             std::uint64_t first_stream, std::size_t count,
                             std::uint64_t* out_max);

void run_batch_scalar(const KernelConfig& cfg, std::uint64_t n, std::uint64_t seed,
                      std::uint64_t first_stream, std::size_t count, std::uint64_t* out_max);

#if defined(TLQ_HAVE_AVX2_KERNELS)
void run_batch_avx2(const KernelConfig& cfg, std::uint64_t n, std::uint64_t seed,
                    std::uint64_t first_stream, std::size_t count, std::uint64_t* out_max);
#endif

enum class EngineChoice { Auto, Scalar, Avx2, Blocked };

bool avx2_supported();

// Auto picks AVX2 when the CPU has it. Requesting Avx2 on a CPU without it
// throws ContractError. Blocked is not a batch kernel; see simulate.
BatchKernel select_batch_kernel(EngineChoice choice);

const char* engine_name(EngineChoice choice);

}  // namespace tlq
