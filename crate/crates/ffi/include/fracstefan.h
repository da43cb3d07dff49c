#ifndef FRACSTEFAN_H
#define FRACSTEFAN_H

#include <stdint.h>

typedef enum FsPhase {
  FS_PHASE_SOLID = 0,
  FS_PHASE_LIQUID = 1,
} FsPhase;

typedef enum FsStatus {
  FS_STATUS_OK = 0,
  FS_STATUS_INVALID_ARGUMENT = 1,
  FS_STATUS_SUBCRITICAL_FLUX = 2,
  FS_STATUS_NO_BRACKET = 3,
  FS_STATUS_NULL_POINTER = 4,
  FS_STATUS_NUMERICAL = 6,
  FS_STATUS_PANIC = 7,
} FsStatus;

/**
 * Opaque solved problem.
 */
typedef struct FsSolution FsSolution;

/**
 * Thermal data. With `initial_temperature == melting_temperature` the
 * problem is one-phase and the solid fields are ignored.
 */
typedef struct FsMedium {
  double k_solid;
  double c_solid;
  double k_liquid;
  double c_liquid;
  double density;
  double latent_heat;
  double initial_temperature;
  double melting_temperature;
  double alpha;
} FsMedium;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Solves the problem with flux q0·t^{-α/2} at the face.
 *
 * # Safety
 * `medium` must point to a valid `FsMedium`; `result` to writable storage.
 */
enum FsStatus fs_solve_flux(const struct FsMedium *medium,
                            double q0,
                            double tol,
                            struct FsSolution **result);

/**
 * Solves the problem with temperature t0 at the face.
 *
 * # Safety
 * As for `fs_solve_flux`.
 */
enum FsStatus fs_solve_temperature(const struct FsMedium *medium,
                                   double t0,
                                   double tol,
                                   struct FsSolution **result);

/**
 * Releases a solution; null is ignored.
 *
 * # Safety
 * `sol` must come from an `fs_solve_*` call and not be used afterwards.
 */
void fs_solution_free(struct FsSolution *sol);

/**
 * Front coefficient μ (or ξ for temperature data).
 *
 * # Safety
 * Valid handle and output pointer.
 */
enum FsStatus fs_solution_mu(const struct FsSolution *sol, double *mu);

/**
 * Relative root residual of the solve.
 *
 * # Safety
 * Valid handle and output pointer.
 */
enum FsStatus fs_solution_residual(const struct FsSolution *sol, double *residual);

/**
 * r(t) = μ λ_s t^{α/2}.
 *
 * # Safety
 * Valid handle and output pointer.
 */
enum FsStatus fs_front_position(const struct FsSolution *sol, double t, double *r);

/**
 * Temperature at (x, t), x >= 0, t > 0, and the phase it lies in.
 *
 * # Safety
 * Valid handle and output pointers.
 */
enum FsStatus fs_temperature(const struct FsSolution *sol,
                             double x,
                             double t,
                             double *temperature,
                             enum FsPhase *phase);

/**
 * Face temperature Θ_l(0, t) (the data itself for temperature problems).
 *
 * # Safety
 * Valid handle and output pointer.
 */
enum FsStatus fs_face_temperature(const struct FsSolution *sol, double *t0);

/**
 * Face flux coefficient q0 (the data itself for flux problems).
 *
 * # Safety
 * Valid handle and output pointer.
 */
enum FsStatus fs_face_flux(const struct FsSolution *sol, double *q0);

/**
 * Wright function W(z; rho; beta), rho in (-1, 0].
 *
 * # Safety
 * `value` must be writable.
 */
enum FsStatus fs_wright(double z, double rho, double beta, double *value);

/**
 * Mainardi function M_rho(x), x >= 0, rho in (0, 1).
 *
 * # Safety
 * `value` must be writable.
 */
enum FsStatus fs_mainardi(double x, double rho, double *value);

/**
 * Message of the last failure on this thread ("" if none). Owned by the
 * library.
 */
const char *fs_last_error_message(void);

const char *fs_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FRACSTEFAN_H */
