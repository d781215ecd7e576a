/* qudit_nc.h
 *
 * C API for the qudit nonclassicality library: finite Fock-superposition
 * states, the generalized binomial family, photon addition/subtraction,
 * field-operator moments, higher-order nonclassicality witnesses, Wigner
 * functions, optical tomograms, and the nonclassical-volume quantifier.
 *
 * All functions returning qnc_status set a thread-local error message
 * retrievable through qnc_last_error() on failure. States are opaque,
 * immutable handles; every operation returns a new state.
 */

#ifndef QUDIT_NC_H
#define QUDIT_NC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    QNC_OK = 0,
    QNC_ERR_INVALID = 1,      /* bad argument / malformed input */
    QNC_ERR_DOMAIN = 2,       /* violated mathematical precondition */
    QNC_ERR_NO_CONVERGE = 3,  /* quadrature failed to converge */
    QNC_ERR_IO = 4
} qnc_status;

typedef struct qnc_state qnc_state;

const char* qnc_last_error(void);

/* ---- states ---------------------------------------------------------- */

/* Normalizes the amplitudes; im may be NULL for a real state. */
qnc_status qnc_state_make(const double* re, const double* im, size_t len,
                          unsigned offset, qnc_state** out);

/* Generalized binomial state with truncation M, parameters p and q.
 * pre_norm_deviation (optional) receives |sum C_n^2 - 1| before the
 * explicit renormalization. */
qnc_status qnc_state_ngbs(unsigned M, double p, double q,
                          double* pre_norm_deviation, qnc_state** out);

qnc_status qnc_state_add_photons(const qnc_state* s, unsigned r, qnc_state** out);
qnc_status qnc_state_subtract_photons(const qnc_state* s, unsigned t, qnc_state** out);

void qnc_state_free(qnc_state* s);

size_t qnc_state_dim(const qnc_state* s);
unsigned qnc_state_offset(const qnc_state* s);
qnc_status qnc_state_amplitude(const qnc_state* s, size_t i, double* re, double* im);

/* Structured text record; round trips bit-exactly at double precision.
 * Call with buf = NULL to query the required size (including the NUL). */
qnc_status qnc_state_serialize(const qnc_state* s, char* buf, size_t cap,
                               size_t* needed);
qnc_status qnc_state_deserialize(const char* text, qnc_state** out);

/* ---- moments --------------------------------------------------------- */

/* <a^dag^k a^l>; exactly real when k == l. */
qnc_status qnc_moment(const qnc_state* s, unsigned k, unsigned l,
                      double* re, double* im);
qnc_status qnc_factorial_moment(const qnc_state* s, unsigned m, double* out);
qnc_status qnc_number_moment(const qnc_state* s, unsigned m, double* out);

/* ---- witnesses ------------------------------------------------------- */

typedef enum {
    QNC_WITNESS_HOA = 0,
    QNC_WITNESS_HOS_HILLERY = 1,
    QNC_WITNESS_HOSPS_LITERAL = 2,
    QNC_WITNESS_HOSPS_DEFINITION = 3
} qnc_witness_kind;

typedef struct {
    qnc_witness_kind kind;
    int order;
    double value;
    int nonclassical; /* value < 0 */
} qnc_witness_result;

/* HOA needs order >= 1, HOS >= 1, both HOSPS variants >= 2. */
qnc_status qnc_witness(const qnc_state* s, qnc_witness_kind kind, int order,
                       qnc_witness_result* out);

/* ---- phase space ----------------------------------------------------- */

qnc_status qnc_wigner(const qnc_state* s, double x, double p, double* w);

/* Row-major nx*np field of pointwise Wigner values; out must hold nx*np. */
qnc_status qnc_wigner_grid(const qnc_state* s, double x_min, double x_max,
                           double p_min, double p_max, int nx, int np,
                           double* out);

qnc_status qnc_tomogram(const qnc_state* s, double X, double theta, double* w);

/* Max deviation between the Radon transform of W and the tomogram over a
 * fixed X grid; quad_nodes >= 64. */
qnc_status qnc_radon_check(const qnc_state* s, double theta, int quad_nodes,
                           double* max_dev);

typedef struct {
    double value;
    double error_estimate;
    double radius;
    int nodes_per_axis;
    int converged;
} qnc_quadrature_report;

/* delta(psi) = IntInt |W| dx dp - 1. Returns QNC_ERR_NO_CONVERGE (with the
 * report still filled in) when refinement stalls above the tolerance. */
qnc_status qnc_nonclassical_volume(const qnc_state* s, double tolerance,
                                   qnc_quadrature_report* out);

#ifdef __cplusplus
}
#endif

#endif /* QUDIT_NC_H */
