#include "mcshane/mcshane.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/errors.hpp"
#include "core/hyptrig.hpp"
#include "core/identities.hpp"
#include "core/moduli.hpp"
#include "core/series.hpp"
#include "core/shooting.hpp"
#include "core/spectra.hpp"

namespace {

thread_local std::string t_last_error;

void set_error(const char* what) { t_last_error = what ? what : ""; }

/// Run a callable, translating exceptions into status codes.
template <class F>
int guarded(F&& fn) {
    try {
        set_error("");
        return fn();
    } catch (const mcshane::LoxodromicViolation& e) {
        set_error(e.what());
        return MSH_ERR_LOXODROMIC;
    } catch (const mcshane::DegenerateCoefficient& e) {
        set_error(e.what());
        return MSH_ERR_INVALID_SEED;
    } catch (const mcshane::InvalidSeed& e) {
        set_error(e.what());
        return MSH_ERR_INVALID_SEED;
    } catch (const mcshane::DegenerateShot& e) {
        set_error(e.what());
        return MSH_ERR_DEGENERATE;
    } catch (const mcshane::NoConvergence& e) {
        set_error(e.what());
        return MSH_ERR_NO_CONVERGENCE;
    } catch (const mcshane::DomainError& e) {
        set_error(e.what());
        return MSH_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return MSH_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return MSH_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MSH_ERR_INTERNAL;
    }
}

void fill_report(const mcshane::SeriesReport& r, msh_series_report* out) {
    out->partial_sum_re = r.partial_sum.real();
    out->partial_sum_im = r.partial_sum.imag();
    out->target_re = r.target.real();
    out->target_im = r.target.imag();
    out->residual = r.residual;
    out->tail_bound = r.tail_bound;
    out->terms_used = r.terms_used;
    out->converged = r.converged ? 1 : 0;
    out->y0_re = r.y0.real();
    out->y0_im = r.y0.imag();
    out->y1_re = r.y1.real();
    out->y1_im = r.y1.imag();
    out->z_re = r.z.real();
    out->z_im = r.z.imag();
    out->l_gamma_re = r.l_gamma.real();
    out->l_gamma_im = r.l_gamma.imag();
    out->c = r.c;
    out->boundary_length = r.boundary_length;
    out->depth = r.depth;
}

void fill_shot(const mcshane::ShotOutcome& oc, msh_shot* out) {
    switch (oc.classification) {
        case mcshane::ShotClass::SelfOrStart: out->classification = MSH_SHOT_SELF_OR_START; break;
        case mcshane::ShotClass::HitBoundary: out->classification = MSH_SHOT_HIT_BOUNDARY; break;
        case mcshane::ShotClass::Unresolved: out->classification = MSH_SHOT_UNRESOLVED; break;
    }
    out->boundary_index = oc.boundary_index;
    switch (oc.first_one_sided) {
        case mcshane::OneSidedTag::None: out->first_one_sided = MSH_FIRST_NONE; break;
        case mcshane::OneSidedTag::Mu: out->first_one_sided = MSH_FIRST_MU; break;
        case mcshane::OneSidedTag::MuPrime: out->first_one_sided = MSH_FIRST_MU_PRIME; break;
    }
    out->crossed_mu = oc.crossed_mu ? 1 : 0;
    out->crossed_mu_prime = oc.crossed_mu_prime ? 1 : 0;
    out->arcs_traced = oc.arcs_traced;
    out->path_length = oc.path_length;
    out->launch_s = oc.launch_s;
}

void fill_integral(const mcshane::IntegralResult& r, msh_integral_result* out) {
    out->value = r.value;
    out->error_estimate = r.error_estimate;
    out->has_target = r.has_target ? 1 : 0;
    out->target = r.target;
    out->residual = r.residual;
    out->samples = r.samples;
}

} // namespace

struct msh_spectrum {
    mcshane::Spectrum impl;
};

struct msh_surface {
    mcshane::SurfaceGeometry impl;
};

extern "C" {

const char* msh_status_name(int status) {
    switch (status) {
        case MSH_OK: return "ok";
        case MSH_ERR_NULL_POINTER: return "null_pointer";
        case MSH_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case MSH_ERR_DOMAIN: return "domain_error";
        case MSH_ERR_INVALID_SEED: return "invalid_seed";
        case MSH_ERR_LOXODROMIC: return "loxodromic_violation";
        case MSH_ERR_DEGENERATE: return "degenerate";
        case MSH_ERR_NO_CONVERGENCE: return "no_convergence";
        case MSH_ERR_INTERNAL: return "internal_error";
        default: return "unknown";
    }
}

const char* msh_last_error(void) { return t_last_error.c_str(); }

const char* msh_version(void) { return "0.1.0"; }

int msh_length_from_trace(double trace, int det_sign, double* length_out) {
    if (!length_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *length_out = mcshane::length_from_trace(trace, det_sign).value;
        return MSH_OK;
    });
}

int msh_trace_from_length(double length, int one_sided, double* trace_out) {
    if (!trace_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        mcshane::GeodesicLength l{length, one_sided ? mcshane::Sidedness::OneSided
                                                    : mcshane::Sidedness::TwoSided};
        *trace_out = mcshane::trace_from_length(l);
        return MSH_OK;
    });
}

#define MSH_SCALAR3(NAME, CALL)                                     \
    int NAME(double x, double y, double z, double* out) {           \
        if (!out) return MSH_ERR_NULL_POINTER;                      \
        return guarded([&] {                                        \
            *out = CALL(x, y, z);                                   \
            return MSH_OK;                                          \
        });                                                         \
    }

MSH_SCALAR3(msh_R, mcshane::identity_R)
MSH_SCALAR3(msh_D, mcshane::identity_D)
MSH_SCALAR3(msh_E, mcshane::identity_E)
MSH_SCALAR3(msh_F, mcshane::identity_F)
MSH_SCALAR3(msh_fourth_length_mobius, mcshane::fourth_length_mobius)

#undef MSH_SCALAR3

int msh_bordered_rhs(double L, double l_gamma, double* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *out = mcshane::bordered_rhs(L, l_gamma);
        return MSH_OK;
    });
}

int msh_sum_punctured_klein(double y0, double y1, double tol, int64_t max_terms,
                            msh_series_report* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        fill_report(mcshane::sum_punctured_klein(y0, y1, tol, max_terms), out);
        return MSH_OK;
    });
}

int msh_sum_bordered_klein(double L, double y0, double y1, double tol, int64_t max_terms,
                           msh_series_report* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        fill_report(mcshane::sum_bordered_klein(L, y0, y1, tol, max_terms), out);
        return MSH_OK;
    });
}

int msh_sum_punctured_torus(int depth, double tol, msh_series_report* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        fill_report(mcshane::sum_punctured_torus(depth, tol), out);
        return MSH_OK;
    });
}

int msh_sum_complex(double y0_re, double y0_im, double y1_re, double y1_im, double tol,
                    int64_t max_terms, msh_series_report* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        fill_report(mcshane::sum_complex({y0_re, y0_im}, {y1_re, y1_im}, tol, max_terms),
                    out);
        return MSH_OK;
    });
}

int msh_spectrum_create(double y0, double y1, double c, msh_spectrum** out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        double z = mcshane::z_from_seed(y0, y1, c);
        *out = new msh_spectrum{mcshane::Spectrum(y0, y1, z, c)};
        return MSH_OK;
    });
}

int msh_spectrum_create_bordered(double L, double y0, double y1, msh_spectrum** out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *out = new msh_spectrum{mcshane::make_bordered_spectrum(L, y0, y1)};
        return MSH_OK;
    });
}

int msh_spectrum_create_fibonacci(msh_spectrum** out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *out = new msh_spectrum{mcshane::fibonacci_surface().spectrum};
        return MSH_OK;
    });
}

void msh_spectrum_destroy(msh_spectrum* s) { delete s; }

int msh_spectrum_extend(msh_spectrum* s, int64_t lo, int64_t hi) {
    if (!s) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        if (lo > hi) {
            set_error("msh_spectrum_extend: lo > hi");
            return MSH_ERR_INVALID_ARGUMENT;
        }
        s->impl.ensure(lo, hi);
        return MSH_OK;
    });
}

int msh_spectrum_range(const msh_spectrum* s, int64_t* lo, int64_t* hi) {
    if (!s || !lo || !hi) return MSH_ERR_NULL_POINTER;
    *lo = s->impl.lo();
    *hi = s->impl.hi();
    return MSH_OK;
}

int msh_spectrum_term(const msh_spectrum* s, int64_t index, double* y_out) {
    if (!s || !y_out) return MSH_ERR_NULL_POINTER;
    if (index < s->impl.lo() || index > s->impl.hi()) {
        set_error("msh_spectrum_term: index outside generated range");
        return MSH_ERR_INVALID_ARGUMENT;
    }
    *y_out = s->impl.term(index);
    return MSH_OK;
}

int msh_spectrum_z(const msh_spectrum* s, double* z_out) {
    if (!s || !z_out) return MSH_ERR_NULL_POINTER;
    *z_out = s->impl.z();
    return MSH_OK;
}

int msh_spectrum_constant(const msh_spectrum* s, double* c_out) {
    if (!s || !c_out) return MSH_ERR_NULL_POINTER;
    *c_out = s->impl.c();
    return MSH_OK;
}

int msh_spectrum_l_gamma(const msh_spectrum* s, double* out) {
    if (!s || !out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *out = mcshane::spectrum_l_gamma(s->impl.z());
        return MSH_OK;
    });
}

int msh_spectrum_min(msh_spectrum* s, int64_t* index_out, double* y_out) {
    if (!s || !index_out || !y_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        auto [idx, val] = mcshane::spectrum_min(s->impl);
        *index_out = idx;
        *y_out = val;
        return MSH_OK;
    });
}

int msh_markoff_tree(int depth, double delta, double* buf, int64_t capacity,
                     int64_t* count_out) {
    if (!count_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        auto triples = mcshane::markoff_tree(depth, delta);
        *count_out = static_cast<int64_t>(triples.size());
        if (!buf) return MSH_OK; // size query
        if (capacity < *count_out) {
            set_error("msh_markoff_tree: capacity too small");
            return MSH_ERR_INVALID_ARGUMENT;
        }
        for (std::size_t i = 0; i < triples.size(); ++i) {
            buf[3 * i + 0] = triples[i].x;
            buf[3 * i + 1] = triples[i].y;
            buf[3 * i + 2] = triples[i].z;
        }
        return MSH_OK;
    });
}

int msh_fibonacci_generators(double a_out[4], double b_out[4]) {
    if (!a_out || !b_out) return MSH_ERR_NULL_POINTER;
    auto fs = mcshane::fibonacci_surface();
    a_out[0] = fs.A.a();
    a_out[1] = fs.A.b();
    a_out[2] = fs.A.c();
    a_out[3] = fs.A.d();
    b_out[0] = fs.B.a();
    b_out[1] = fs.B.b();
    b_out[2] = fs.B.c();
    b_out[3] = fs.B.d();
    return MSH_OK;
}

int msh_surface_create_pants(double l1, double l2, double l3, msh_surface** out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *out = new msh_surface{mcshane::build_pants(l1, l2, l3)};
        return MSH_OK;
    });
}

int msh_surface_create_moebius(double x, double y, double z, msh_surface** out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *out = new msh_surface{mcshane::build_moebius(x, y, z)};
        return MSH_OK;
    });
}

void msh_surface_destroy(msh_surface* s) { delete s; }

int msh_surface_info(const msh_surface* s, int* is_moebius, double* lengths3, double* z_out,
                     double* z_prime_out) {
    if (!s) return MSH_ERR_NULL_POINTER;
    bool moebius = s->impl.kind == mcshane::SurfaceGeometry::Kind::MoebiusMinusDisk;
    if (is_moebius) *is_moebius = moebius ? 1 : 0;
    if (lengths3) {
        lengths3[0] = s->impl.cover_boundary_lengths[0];
        lengths3[1] = s->impl.cover_boundary_lengths[1];
        lengths3[2] = s->impl.cover_boundary_lengths[2];
    }
    if (z_out) *z_out = s->impl.one_sided_z;
    if (z_prime_out) *z_prime_out = s->impl.one_sided_z_prime;
    return MSH_OK;
}

int msh_surface_shoot(const msh_surface* s, double launch_s, int max_arcs, msh_shot* out) {
    if (!s || !out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        fill_shot(mcshane::shoot(s->impl, launch_s, max_arcs), out);
        return MSH_OK;
    });
}

int msh_surface_estimate_partition(const msh_surface* s, int64_t n_samples, int max_arcs,
                                   uint64_t seed, msh_partition* out, msh_shot* shots_buf) {
    if (!s || !out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        std::vector<mcshane::ShotOutcome> shots;
        auto est = mcshane::estimate_partition(s->impl, n_samples, max_arcs, seed,
                                               shots_buf ? &shots : nullptr);
        out->samples = est.samples;
        out->n_type_a = est.n_a;
        out->n_hit_b2 = est.n_b2;
        out->n_hit_b3 = est.n_b3;
        out->n_unresolved = est.n_unresolved;
        out->n_first_mu = est.n_first_mu;
        out->n_first_mu_prime = est.n_first_mu_prime;
        out->degenerate_retries = est.degenerate_retries;
        out->fact_i_violations = est.fact_i_violations;
        out->fact_ii_violations = est.fact_ii_violations;
        if (shots_buf)
            for (std::size_t i = 0; i < shots.size(); ++i) fill_shot(shots[i], &shots_buf[i]);
        return MSH_OK;
    });
}

int msh_integrate_punctured_klein(int n, int method, double tol, int64_t mc_samples,
                                  uint64_t seed, msh_integral_result* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        mcshane::IntegralResult r;
        if (method == MSH_METHOD_QUADRATURE) {
            r = mcshane::integrate_punctured_klein_quad(n, tol);
        } else if (method == MSH_METHOD_MONTE_CARLO) {
            r = mcshane::integrate_punctured_klein_mc(n, mc_samples, seed);
        } else {
            set_error("msh_integrate_punctured_klein: unknown method");
            return MSH_ERR_INVALID_ARGUMENT;
        }
        fill_integral(r, out);
        return MSH_OK;
    });
}

int msh_integrate_punctured_klein_direct(double tol, msh_integral_result* out) {
    if (!out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        fill_integral(mcshane::integrate_punctured_klein_direct(tol), out);
        return MSH_OK;
    });
}

int msh_chart_one_sided(double L, double l_gamma, double theta, double* y1_out,
                        double* y2_out) {
    if (!y1_out || !y2_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        auto [y1, y2] = mcshane::chart_one_sided_from_fn(L, {l_gamma, theta});
        *y1_out = y1;
        *y2_out = y2;
        return MSH_OK;
    });
}

int msh_jacobian_check_klein(double L, double l_gamma, double theta, double h,
                             double* deviation_out) {
    if (!deviation_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *deviation_out = mcshane::jacobian_check_klein(L, {l_gamma, theta}, h);
        return MSH_OK;
    });
}

int msh_jacobian_check_moebius(double x, double y, double z, double h, double* residual_out) {
    if (!residual_out) return MSH_ERR_NULL_POINTER;
    return guarded([&] {
        *residual_out = mcshane::jacobian_check_moebius(x, y, z, h);
        return MSH_OK;
    });
}

} // extern "C"
