#include "npelab/kernels/kernels.hpp"

#include <cstdlib>
#include <string>

namespace npelab::kernels {

#ifdef NPELAB_HAVE_AVX2_TU
const Ops* avx2_ops_impl();
#else
static const Ops* avx2_ops_impl() { return nullptr; }
#endif

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return avx2_ops_impl();
#endif
    return nullptr;
}

namespace {

struct Selection {
    const Ops* ops;
    std::string name;
};

Selection select() {
    const char* env = std::getenv("NPELAB_KERNEL");
    const std::string want = env ? env : "";
    if (want == "scalar") return {&scalar_ops(), "scalar"};
    const Ops* simd = avx2_ops();
    if (simd && (want.empty() || want == "avx2")) return {simd, "avx2"};
    return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
    static const Selection s = select();
    return s;
}

}  // namespace

const Ops& ops() { return *selection().ops; }
const std::string& backend_name() { return selection().name; }

}  // namespace npelab::kernels
