#ifndef ENRIQUES_H
#define ENRIQUES_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum EnqStatus {
  ENQ_STATUS_OK = 0,
  ENQ_STATUS_NULL_POINTER = 1,
  ENQ_STATUS_INVALID_UTF8 = 2,
  ENQ_STATUS_UNKNOWN_NAME = 3,
  ENQ_STATUS_INVALID_INPUT = 4,
  ENQ_STATUS_COMPUTATION = 5,
  ENQ_STATUS_PANIC = 6,
} EnqStatus;

// A curve diagram.
typedef struct EnqDiagram EnqDiagram;

// The result of running a scenario, with its canonical JSON rendering.
typedef struct EnqReport EnqReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// Valid until the next `enq_*` call on the same thread.
const char *enq_last_error(void);

// Library version, a static string.
const char *enq_version(void);

// Diagram from the built-in catalog, e.g. `"E~8"` or `"e8-special"`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a writable pointer.
enum EnqStatus enq_diagram_from_catalog(const char *name, struct EnqDiagram **out);

// Diagram from JSON `{"vertices": [...], "edges": [[i, j, m], [i, j, m, points], ...]}`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum EnqStatus enq_diagram_from_json(const char *json, struct EnqDiagram **out);

// # Safety
// `d` must be null or a handle from an `enq_diagram_*` constructor not yet freed.
void enq_diagram_free(struct EnqDiagram *d);

// Number of vertices, 0 for a null handle.
//
// # Safety
// `d` must be null or a live diagram handle.
size_t enq_diagram_vertex_count(const struct EnqDiagram *d);

// Determinant of the intersection matrix.
//
// # Safety
// `d` must be a live diagram handle and `out` a writable pointer.
enum EnqStatus enq_diagram_determinant(const struct EnqDiagram *d, int64_t *out);

// Type of the diagram as text, e.g. `"affine E~8"`; free with [`enq_string_free`].
//
// # Safety
// `d` must be a live diagram handle and `out` a writable pointer.
enum EnqStatus enq_diagram_classify(const struct EnqDiagram *d, char **out);

// Number of rank-8 configurations of disjoint affine subdiagrams.
//
// # Safety
// `d` must be a live diagram handle and `out` a writable pointer.
enum EnqStatus enq_diagram_fibration_count(const struct EnqDiagram *d, size_t *out);

// Run a scenario document. A report whose checks fail is still returned
// with `ENQ_STATUS_OK`; inspect it with [`enq_report_passed`].
//
// # Safety
// `scenario_json` must be a NUL-terminated string and `out` a writable pointer.
enum EnqStatus enq_report_run(const char *scenario_json, struct EnqReport **out);

// Whether every check in the report passed; false for a null handle.
//
// # Safety
// `r` must be null or a live report handle.
bool enq_report_passed(const struct EnqReport *r);

// Canonical JSON of the report, owned by the handle; null for a null handle.
//
// # Safety
// `r` must be null or a live report handle.
const char *enq_report_json(const struct EnqReport *r);

// # Safety
// `r` must be null or a handle from [`enq_report_run`] not yet freed.
void enq_report_free(struct EnqReport *r);

// # Safety
// `s` must be null or a string returned through an out-pointer by this library.
void enq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENRIQUES_H */
