#include "ptsqw/well.hpp"

namespace ptsqw {

const char* region_name(Region r) {
    switch (r) {
        case Region::L2: return "L2";
        case Region::L1: return "L1";
        case Region::R1: return "R1";
        case Region::R2: return "R2";
    }
    return "?";
}

Region classify_region(const WellConfig& cfg, double x) {
    if (!(x > -cfg.L && x < cfg.L))
        throw std::domain_error("classify_region: x outside (-L, L)");
    if (x == -cfg.l || x == 0.0 || x == cfg.l)
        throw std::domain_error("classify_region: x is a matching point");
    if (x < -cfg.l) return Region::L2;
    if (x < 0.0) return Region::L1;
    if (x < cfg.l) return Region::R1;
    return Region::R2;
}

complexd potential_value(const WellConfig& cfg, double x) {
    if (!(x > -cfg.L && x < cfg.L))
        throw std::domain_error("potential_value: x outside (-L, L)");
    if (x == 0.0) return {0.0, 0.0};
    if (x == -cfg.l) return {0.0, -0.5 * cfg.g};
    if (x == cfg.l) return {0.0, 0.5 * cfg.g};
    switch (classify_region(cfg, x)) {
        case Region::L1: return {0.0, -cfg.g};
        case Region::R1: return {0.0, cfg.g};
        default: return {0.0, 0.0};
    }
}

}  // namespace ptsqw
