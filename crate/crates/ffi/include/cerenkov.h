#ifndef CERENKOV_H
#define CERENKOV_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define CRK_UNITS_REDUCED 0

#define CRK_UNITS_GAUSSIAN_CGS 1

#define CRK_DIM_2D 2

#define CRK_DIM_3D 3

#define CRK_THRESHOLD_BELOW -1

#define CRK_THRESHOLD_AT 0

#define CRK_THRESHOLD_ABOVE 1

typedef enum CrkStatus {
  CRK_STATUS_OK = 0,
  CRK_STATUS_NULL_POINTER = 1,
  CRK_STATUS_INVALID_ARGUMENT = 2,
  // No cone (or other quantity) exists at or below threshold.
  CRK_STATUS_BELOW_THRESHOLD = 3,
  // The Weber integral diverges (`a = b`).
  CRK_STATUS_DIVERGENT = 4,
  // The dispersion model cannot be evaluated at the requested frequency.
  CRK_STATUS_DISPERSION = 5,
  CRK_STATUS_IO = 6,
  CRK_STATUS_PARSE = 7,
  // The integrator ran out of budget.
  CRK_STATUS_NOT_CONVERGED = 8,
  CRK_STATUS_PANIC = 9,
} CrkStatus;

// A refractive-index model `n(omega)`.
typedef struct CrkDispersion CrkDispersion;

// Refractive index and permeability of a medium.
typedef struct CrkMedium CrkMedium;

// Charge and speed of the radiating particle.
typedef struct CrkParticle CrkParticle;

// A computed spectrum.
typedef struct CrkSpectrum CrkSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or `NULL` if the last
// call succeeded. Valid until the next `crk_*` call on the same thread.
const char *crk_last_error(void);

// Library version as a static NUL-terminated string.
const char *crk_version(void);

// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_medium_new(double refractive_index, double permeability, struct CrkMedium **out);

// # Safety
// `medium` must be `NULL` or a handle from [`crk_medium_new`] not yet freed.
void crk_medium_free(struct CrkMedium *medium);

// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_particle_new(double charge_multiple, double beta, struct CrkParticle **out);

// # Safety
// `particle` must be `NULL` or a handle from [`crk_particle_new`] not yet freed.
void crk_particle_free(struct CrkParticle *particle);

// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_dispersion_constant(double refractive_index, struct CrkDispersion **out);

// Single-resonance model `n² = 1 + strength·ω₀²/(ω₀² − ω²)`.
//
// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_dispersion_single_resonance(double resonance_omega,
                                               double strength,
                                               struct CrkDispersion **out);

// Linearly interpolated table of `len` rows, `omega` strictly increasing.
//
// # Safety
// `omega` and `n` must each point to `len` readable doubles; `out` must be valid for writes.
enum CrkStatus crk_dispersion_tabulated(const double *omega,
                                        const double *n,
                                        size_t len,
                                        struct CrkDispersion **out);

// Loads an `omega,n` CSV table.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be valid for writes.
enum CrkStatus crk_dispersion_from_csv(const char *path, struct CrkDispersion **out);

// # Safety
// `model` must be a live handle; `out` must be valid for writes.
enum CrkStatus crk_dispersion_n_of_omega(const struct CrkDispersion *model,
                                         double omega,
                                         double *out);

// # Safety
// `model` must be `NULL` or a live handle.
void crk_dispersion_free(struct CrkDispersion *model);

// Writes `n·β` to `out`.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_cherenkov_parameter(const struct CrkMedium *medium,
                                       const struct CrkParticle *particle,
                                       double *out);

// Writes one of the `CRK_THRESHOLD_*` constants to `out`.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_threshold_status(const struct CrkMedium *medium,
                                    const struct CrkParticle *particle,
                                    int *out);

// Closed-form sheet power; `doubled_prefactor` selects the doubled normalisation.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_power_2d_closed(const struct CrkMedium *medium,
                                   const struct CrkParticle *particle,
                                   bool doubled_prefactor,
                                   int unit_system,
                                   double *out);

// Sheet power at `omega` by quadrature, to absolute tolerance `tol`.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_power_2d_numeric(const struct CrkMedium *medium,
                                    const struct CrkParticle *particle,
                                    double omega,
                                    double tol,
                                    int unit_system,
                                    double *out);

// Closed-form bulk power at `omega`.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_power_3d(const struct CrkMedium *medium,
                            const struct CrkParticle *particle,
                            double omega,
                            int unit_system,
                            double *out);

// Bulk power at `omega` by quadrature, to absolute tolerance `tol`.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_power_3d_numeric(const struct CrkMedium *medium,
                                    const struct CrkParticle *particle,
                                    double omega,
                                    double tol,
                                    int unit_system,
                                    double *out);

// Cone half-angle in radians; [`CrkStatus::BelowThreshold`] when `nβ ≤ 1`.
//
// # Safety
// Handles must be live; `out` must be valid for writes.
enum CrkStatus crk_cone_angle(const struct CrkMedium *medium,
                              const struct CrkParticle *particle,
                              double *out_theta);

// `power_density / (ħ·omega)`.
//
// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_photon_rate(double power_density, double omega, int unit_system, double *out);

// `J₀(x)`.
//
// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_bessel_j0(double x, double *out);

// `J_n(x)`.
//
// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_bessel_jn(uint32_t order, double x, double *out);

// Numerical `∫₀^∞ J₀(aτ)cos(bτ)dτ`. `out_error` may be `NULL`. Returns
// [`CrkStatus::NotConverged`] (with the best value still written) when
// the tolerance could not be met.
//
// # Safety
// `out_value` must be valid for writes; `out_error` must be `NULL` or valid for writes.
enum CrkStatus crk_weber_integral(double a,
                                  double b,
                                  double tol,
                                  double *out_value,
                                  double *out_error);

// `1/√(a² − b²)` for `b < a`, else `0`.
//
// # Safety
// `out` must be valid for writes.
enum CrkStatus crk_weber_closed_form(double a, double b, double *out);

// Closed-form spectrum on the given increasing positive frequencies.
//
// # Safety
// Handles must be live; `omega` must point to `len` readable doubles; `out` must be valid for writes.
enum CrkStatus crk_scan_spectrum(int dim,
                                 const struct CrkDispersion *model,
                                 double permeability,
                                 const struct CrkParticle *particle,
                                 const double *omega,
                                 size_t len,
                                 int unit_system,
                                 bool doubled_prefactor,
                                 struct CrkSpectrum **out);

// Number of points in a spectrum; `0` for `NULL`.
//
// # Safety
// `spectrum` must be `NULL` or a live handle.
size_t crk_spectrum_len(const struct CrkSpectrum *spectrum);

// Copies point `index`. Any of the out-pointers may be `NULL`.
//
// # Safety
// `spectrum` must be a live handle; non-NULL out-pointers must be valid for writes.
enum CrkStatus crk_spectrum_point(const struct CrkSpectrum *spectrum,
                                  size_t index,
                                  double *out_omega,
                                  double *out_power,
                                  double *out_photon_rate);

// # Safety
// `spectrum` must be `NULL` or a live handle.
void crk_spectrum_free(struct CrkSpectrum *spectrum);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CERENKOV_H */
