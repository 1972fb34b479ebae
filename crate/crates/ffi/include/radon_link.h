/* C interface for the radon-link library. */

#ifndef RADON_LINK_H
#define RADON_LINK_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum RlStatus {
  RL_STATUS_OK = 0,
  RL_STATUS_NULL_POINTER = 1,
  RL_STATUS_INVALID_UTF8 = 2,
  RL_STATUS_PARSE_ERROR = 3,
  RL_STATUS_INVALID_ARGUMENT = 4,
  RL_STATUS_NOT_GENERAL_POSITION = 5,
  RL_STATUS_VERIFICATION_FAILED = 6,
  RL_STATUS_INTERNAL_DEFECT = 7,
} RlStatus;

// Opaque handle to a point configuration.
typedef struct RlConfiguration RlConfiguration;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *rl_version(void);

// Message for the most recent error on this thread; valid until the
// next failing call on the same thread. Do not free.
const char *rl_last_error_message(void);

// Frees a string returned by any `rl_*` call.
//
// # Safety
// `s` must be a pointer previously returned through an `out` parameter
// of this library, not yet freed; NULL is ignored.
void rl_string_free(char *s);

// Parses a point file (the text format of the CLI) into a handle.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum RlStatus rl_configuration_parse(const char *text, struct RlConfiguration **out);

// Generates the seeded random configuration with integer coordinates
// in `[-bound, bound]^n`, rejection-sampled to general position.
//
// # Safety
// `out` must be a valid pointer.
enum RlStatus rl_configuration_generate_random(uint32_t n,
                                               uint64_t seed,
                                               int64_t bound,
                                               struct RlConfiguration **out);

// Builds the moment-curve configuration on comma-separated, strictly
// increasing rational parameters (exactly n+3 of them).
//
// # Safety
// `params` must be a NUL-terminated string and `out` a valid pointer.
enum RlStatus rl_configuration_generate_moment(uint32_t n,
                                               const char *params,
                                               struct RlConfiguration **out);

// Releases a configuration handle; NULL is ignored.
//
// # Safety
// `handle` must come from a constructor of this library and must not
// be used afterwards.
void rl_configuration_free(struct RlConfiguration *handle);

// Renders the canonical point-file text for a handle.
//
// # Safety
// `handle` must be valid and `out` a valid pointer.
enum RlStatus rl_configuration_to_pointfile(const struct RlConfiguration *handle, char **out);

// General-position report as a JSON document `{ok, violation?}` with
// 1-based point labels. Returns OK even for degenerate configurations;
// inspect the document.
//
// # Safety
// `handle` must be valid and `out` a valid pointer.
enum RlStatus rl_check_general_position(const struct RlConfiguration *handle, char **out);

// Runs the partition search appropriate for the dimension's parity,
// verifies the certificate, and returns the result document JSON.
//
// # Safety
// `handle` must be valid and `out` a valid pointer.
enum RlStatus rl_find(const struct RlConfiguration *handle, char **out);

// Re-checks a result document (JSON text) against a configuration.
// `RL_STATUS_OK` means the document describes this input and its
// certificate re-derives exactly.
//
// # Safety
// `handle` must be valid and `result_json` a NUL-terminated string.
enum RlStatus rl_verify(const struct RlConfiguration *handle, const char *result_json);

// Brute-force enumeration of all qualifying pairs, as the enumeration
// document JSON. `max_n` bounds the dimension the enumeration will
// attempt (the CLI default is 8).
//
// # Safety
// `handle` must be valid and `out` a valid pointer.
enum RlStatus rl_enumerate(const struct RlConfiguration *handle, uint32_t max_n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RADON_LINK_H */
