#ifndef LENS_SURGERY_H
#define LENS_SURGERY_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum LsModification {
  LS_MODIFICATION_CROSSING_POSITIVE = 0,
  LS_MODIFICATION_CROSSING_NEGATIVE = 1,
  LS_MODIFICATION_SMOOTHING = 2,
} LsModification;

typedef enum LsObtainable {
  LS_OBTAINABLE_YES = 0,
  LS_OBTAINABLE_NO = 1,
  LS_OBTAINABLE_INCONCLUSIVE = 2,
} LsObtainable;

typedef enum LsStatus {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_POINTER = 1,
  LS_STATUS_INVALID_ARGUMENT = 2,
  LS_STATUS_OVERFLOW = 3,
  LS_STATUS_MALFORMED_INPUT = 4,
  LS_STATUS_NOT_A_KNOT = 5,
  LS_STATUS_CROSSING_CAP = 6,
  LS_STATUS_INVALID_BUDGET = 7,
  LS_STATUS_PANIC = 8,
} LsStatus;

// Opaque planar diagram.
typedef struct LsDiagram LsDiagram;

// Opaque decision report.
typedef struct LsReport LsReport;

typedef struct LsBudget {
  uint64_t node_cap;
  uint32_t headroom;
  uint32_t jones_cap;
} LsBudget;

typedef struct LsCriterion {
  int64_t psi;
  int64_t phi;
  int64_t value;
  bool passes;
} LsCriterion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message on this thread into `buf` (NUL-terminated,
// truncated to `len`). Returns the full message length, 0 when there is none.
//
// # Safety
// `buf` must be null or valid for `len` bytes of writes.
size_t ls_last_error(char *buf, size_t len);

struct LsBudget ls_budget_default(void);

// # Safety
// `out` must be valid for writes.
enum LsStatus ls_criterion(int64_t p, int64_t q, int64_t u, struct LsCriterion *out);

// # Safety
// `out_q` must be valid for writes.
enum LsStatus ls_canonical_q(int64_t p, int64_t q, int64_t *out_q);

// # Safety
// `out` must be valid for writes.
enum LsStatus ls_homeomorphic(int64_t p1, int64_t q1, int64_t p2, int64_t q2, bool *out);

// Schubert diagram of the two-bridge link `b(p,q)`, `0 < q < p/2`.
//
// # Safety
// `out` must be valid for writes.
enum LsStatus ls_schubert_diagram(int64_t p, int64_t q, struct LsDiagram **out);

// The Schubert diagram of `b(p,q)` modified at wedge `u`.
//
// # Safety
// `out` must be valid for writes.
enum LsStatus ls_wedge_candidate(int64_t p,
                                 int64_t q,
                                 int64_t u,
                                 enum LsModification mode,
                                 struct LsDiagram **out);

// Parses PD text (`PD arcs=<n> components=<k>` then `X[a,b,c,d]` lines).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for writes.
enum LsStatus ls_diagram_parse(const char *text, struct LsDiagram **out);

// PD text of a diagram; release with [`ls_string_free`].
//
// # Safety
// `diagram` must be a live handle; `out` must be valid for writes.
enum LsStatus ls_diagram_to_pd(const struct LsDiagram *diagram, char **out);

// # Safety
// `diagram` must be a live handle; the out-pointers must be valid for writes.
enum LsStatus ls_diagram_counts(const struct LsDiagram *diagram,
                                size_t *crossings,
                                size_t *components);

// # Safety
// `diagram` must be a live handle; `out` must be valid for writes.
enum LsStatus ls_diagram_determinant(const struct LsDiagram *diagram, uint64_t *out);

// # Safety
// `diagram` must be null or a handle not yet freed.
void ls_diagram_free(struct LsDiagram *diagram);

// Runs the full decision for `L(p,q)`.
//
// # Safety
// `out` must be valid for writes.
enum LsStatus ls_decide(int64_t p, int64_t q, struct LsBudget budget, struct LsReport **out);

// # Safety
// `report` must be a live handle; `out` must be valid for writes.
enum LsStatus ls_report_obtainable(const struct LsReport *report, enum LsObtainable *out);

// Copies up to `cap` witnesses into `buf` and stores the total count in `count`.
//
// # Safety
// `report` must be a live handle; `buf` must be null or valid for `cap`
// writes; `count` must be valid for writes.
enum LsStatus ls_report_witnesses(const struct LsReport *report,
                                  int64_t *buf,
                                  size_t cap,
                                  size_t *count);

// JSON form of a report; release with [`ls_string_free`].
//
// # Safety
// `report` must be a live handle; `out` must be valid for writes.
enum LsStatus ls_report_to_json(const struct LsReport *report, char **out);

// # Safety
// `report` must be null or a handle not yet freed.
void ls_report_free(struct LsReport *report);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void ls_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LENS_SURGERY_H */
