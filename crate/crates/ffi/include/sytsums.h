/* C ABI for the sytsums library.
 *
 * Every fallible call returns a sytsums_status; results are written
 * through out-pointers. Big integers cross the boundary as NUL-terminated
 * decimal strings allocated by the library; release them with
 * sytsums_string_free. Partitions are opaque handles; release them with
 * sytsums_partition_free.
 *
 * Kept in sync by hand with crates/ffi/src/lib.rs.
 */

#ifndef SYTSUMS_H
#define SYTSUMS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sytsums_status {
  SYTSUMS_OK = 0,
  SYTSUMS_INVALID_ARGUMENT = 1,
  SYTSUMS_OUT_OF_DOMAIN = 2,
  SYTSUMS_CAP_EXCEEDED = 3,
  SYTSUMS_INDIVISIBLE = 4,
  SYTSUMS_UNKNOWN_IDENTITY = 5,
  SYTSUMS_VERIFICATION_FAILED = 6,
  SYTSUMS_NULL_POINTER = 7,
} sytsums_status;

/* Opaque partition handle. */
typedef struct SytsumsPartition SytsumsPartition;

/* Frees a string allocated by this library. NULL is ignored. */
void sytsums_string_free(char *s);

/* Parses a partition from its textual form, e.g. "4,2^3,1". */
sytsums_status sytsums_partition_parse(const char *text, SytsumsPartition **out);

/* Frees a partition handle. NULL is ignored. */
void sytsums_partition_free(SytsumsPartition *p);

/* The canonical textual form of a partition. */
sytsums_status sytsums_partition_to_string(const SytsumsPartition *p, char **out);

/* SYT count of a shape by the hook formula, as a decimal string. */
sytsums_status sytsums_syt_count(const SytsumsPartition *p, char **out);

/* Brute-force SYT count; SYTSUMS_CAP_EXCEEDED when size > cap. */
sytsums_status sytsums_syt_oracle_count(const SytsumsPartition *p, uint64_t cap, char **out);

/* The hook sum S(k,l;n). Nonzero `closed` selects the closed form, which
 * exists only for the strips k <= 5 and the (1,1), (2,1), (3,1) hooks. */
sytsums_status sytsums_hook_sum(uint64_t k, uint64_t l, uint64_t n, int32_t closed, char **out);

/* The star sub-sum S*(2,2;n) for n >= 4. */
sytsums_status sytsums_star_sum(uint64_t n, int32_t closed, char **out);

/* The Motzkin-sums function a(n). */
sytsums_status sytsums_motzkin_sum_a(uint64_t n, char **out);

/* The Motzkin number M_n. */
sytsums_status sytsums_motzkin_number(uint64_t n, char **out);

/* The Catalan number C_n. */
sytsums_status sytsums_catalan(uint64_t n, char **out);

/* Total hump count over all paths of one kind (0 = Dyck, 1 = Motzkin) and
 * length n. Nonzero `closed` uses the closed form; otherwise paths are
 * enumerated subject to `cap`. */
sytsums_status sytsums_total_humps(int32_t kind, uint64_t n, int32_t closed, uint64_t cap,
                                   char **out);

/* Verifies a registered identity over [lo, hi] and writes the report as a
 * JSON string. SYTSUMS_OK on pass, SYTSUMS_VERIFICATION_FAILED on failure
 * (the report is still written). */
sytsums_status sytsums_verify(const char *identity, uint64_t lo, uint64_t hi, char **report_json);

#ifdef __cplusplus
}
#endif

#endif /* SYTSUMS_H */
