#include "gsee/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gsee/filters.hpp"

namespace gsee {

void check_accuracy(const Accuracy& acc) {
    if (!(acc.epsilon > 0.0) || !std::isfinite(acc.epsilon)) {
        throw std::invalid_argument("epsilon must be positive and finite");
    }
    if (!(acc.delta > 0.0) || !(acc.delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
}

ProblemInstance::ProblemInstance(SpectralMeasure m, double delta_lb, double eta_lb,
                                 double e_lo, double e_hi)
    : measure(std::move(m)), delta_lb(delta_lb), eta_lb(eta_lb), e_lo(e_lo), e_hi(e_hi) {
    if (!(delta_lb > 0.0) || !std::isfinite(delta_lb)) {
        throw std::invalid_argument("delta_lb must be positive and finite");
    }
    if (!(eta_lb > 0.0) || eta_lb > 1.0) {
        throw std::invalid_argument("eta_lb must lie in (0, 1]");
    }
    if (!(e_lo < e_hi)) throw std::invalid_argument("energy window is empty");
    if (measure.min_energy() < e_lo || measure.max_energy() > e_hi) {
        std::ostringstream os;
        os << "spectrum [" << measure.min_energy() << ", " << measure.max_energy()
           << "] leaves the window [" << e_lo << ", " << e_hi << "]";
        throw std::invalid_argument(os.str());
    }
    // A false overlap promise silently voids every confidence statement
    // downstream, so it is a hard error.  A false gap promise only degrades
    // accuracy and stays representable; see gap_promise_holds().
    if (eta_lb > measure.ground_weight() + 1e-12) {
        std::ostringstream os;
        os << "eta_lb = " << eta_lb << " exceeds the ground weight "
           << measure.ground_weight();
        throw std::invalid_argument(os.str());
    }
}

bool ProblemInstance::gap_promise_holds() const {
    if (measure.size() < 2) return true;
    return measure.gap() >= delta_lb;
}

namespace {

// c * sigma(delta, e, eta): the largest epsilon the separation argument
// tolerates at this filter width.
double admissible_bound(double e, double delta, double eta) {
    return separation_constant * choose_sigma(delta, e, eta);
}

}  // namespace

EpsilonVerdict validate_epsilon(double epsilon, double delta_lb, double eta_lb) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be positive and finite");
    }
    if (!(delta_lb > 0.0) || !std::isfinite(delta_lb)) {
        throw std::invalid_argument("delta_lb must be positive and finite");
    }
    if (!(eta_lb > 0.0) || eta_lb > 1.0) {
        throw std::invalid_argument("eta_lb must lie in (0, 1]");
    }

    // The bound never exceeds c * 0.2 * delta (the width cap), and for
    // e -> 0 the bound beats e, so the largest admissible epsilon is the
    // unique crossing of e = bound(e) in (0, c * 0.2 * delta].  Uniqueness:
    // at any crossing the bound's slope is 1 / (2 ln(9 delta / (e eta))) < 1.
    double hi = separation_constant * 0.2 * delta_lb;
    double max_eps;
    if (admissible_bound(hi, delta_lb, eta_lb) >= hi) {
        max_eps = hi;  // width cap active at the crossing; hi itself admissible
    } else {
        double lo = hi * 1e-18;
        for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
            double mid = 0.5 * (lo + hi);
            if (admissible_bound(mid, delta_lb, eta_lb) >= mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        max_eps = lo;
    }

    return EpsilonVerdict{epsilon <= admissible_bound(epsilon, delta_lb, eta_lb), max_eps};
}

double min_admissible_gap(double epsilon, double eta_lb) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be positive and finite");
    }
    if (!(eta_lb > 0.0) || eta_lb > 1.0) {
        throw std::invalid_argument("eta_lb must lie in (0, 1]");
    }

    // The admissibility bound is increasing in the gap, so the smallest
    // admissible gap is a unique crossing.  The bound never exceeds
    // 0.2 c delta, so no gap below epsilon / (0.2 c) can ever work; if that
    // candidate passes (width cap binding), it is the exact answer,
    // otherwise bracket upward and bisect.
    auto admissible = [&](double delta) {
        return epsilon <= admissible_bound(epsilon, delta, eta_lb);
    };
    double lo = epsilon / (0.2 * separation_constant);
    if (admissible(lo)) return lo;
    double hi = lo;
    int guard = 0;
    do {
        hi *= 2.0;
        if (++guard > 200) {
            throw std::runtime_error("min_admissible_gap failed to bracket");
        }
    } while (!admissible(hi));
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (admissible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace gsee
