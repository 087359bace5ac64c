#include "tlq/engine.hpp"

#include "tlq/errors.hpp"

#if defined(__x86_64__)
#include <cpuid.h>
#endif

namespace tlq {

Threshold bernoulli_threshold(const Rat& p) {
    if (p <= 0) return {0, false};
    if (p >= 1) return {0, true};
    // floor(p * 2^64), exact in integer arithmetic; p < 1 keeps it below 2^64
    Int t = (p.get_num() << 64) / p.get_den();
    return {static_cast<std::uint64_t>(t.get_ui()), false};
}

KernelConfig KernelConfig::make(const ModelParams& params, const Schedule& schedule) {
    KernelConfig cfg;
    cfg.kind = schedule.kind();
    cfg.arrive = bernoulli_threshold(params.p);
    cfg.depart = bernoulli_threshold(params.q);
    if (schedule.kind() == Schedule::Kind::Blocks) {
        cfg.ell = static_cast<std::uint64_t>(schedule.ell());
    } else if (schedule.kind() == Schedule::Kind::Pattern) {
        for (char c : schedule.word()) cfg.pattern.push_back(c == 'R' ? 1 : 0);
    } else {
        Rat half_p = params.p / 2;
        cfg.rl_up = bernoulli_threshold(half_p).thr;
        cfg.rl_zero = cfg.rl_up + (1ULL << 63);  // wraps to 0 iff p = 1
        cfg.rl_minus_never = params.p >= 1;
    }
    return cfg;
}

bool avx2_supported() {
#if defined(__x86_64__)
    unsigned eax, ebx, ecx, edx;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    return (ebx & (1u << 5)) != 0;
#else
    return false;
#endif
}

BatchKernel select_batch_kernel(EngineChoice choice) {
    switch (choice) {
        case EngineChoice::Scalar:
            return &run_batch_scalar;
        case EngineChoice::Avx2:
#if defined(TLQ_HAVE_AVX2_KERNELS)
            if (avx2_supported()) return &run_batch_avx2;
#endif
            throw ContractError("AVX2 kernels unavailable on this CPU/build");
        case EngineChoice::Blocked:
            throw ContractError("blocked engine is not a batch kernel");
        case EngineChoice::Auto:
        default:
#if defined(TLQ_HAVE_AVX2_KERNELS)
            if (avx2_supported()) return &run_batch_avx2;
#endif
            return &run_batch_scalar;
    }
}

const char* engine_name(EngineChoice choice) {
    switch (choice) {
        case EngineChoice::Auto: return "auto";
        case EngineChoice::Scalar: return "scalar";
        case EngineChoice::Avx2: return "avx2";
        case EngineChoice::Blocked: return "blocked";
    }
    return "?";
}

}  // namespace tlq
