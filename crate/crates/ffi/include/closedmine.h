#ifndef CLOSEDMINE_H
#define CLOSEDMINE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CmStatus {
  CM_STATUS_OK = 0,
  CM_STATUS_NULL_POINTER = 1,
  CM_STATUS_PARSE = 2,
  CM_STATUS_INVALID_ARGUMENT = 3,
  CM_STATUS_OUT_OF_RANGE = 4,
  CM_STATUS_IO = 5,
  CM_STATUS_PANIC = 6,
} CmStatus;

// Parsed transaction database.
typedef struct CmDatabase CmDatabase;

// Mined closed itemsets with supports and minimal generators.
typedef struct CmPatternSet CmPatternSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into this library from the same thread.
const char *cm_last_error(void);

// Parses FIMI text (one transaction per line, space-separated item ids).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum CmStatus cm_database_parse(const char *text, struct CmDatabase **out);

// Reads and parses a FIMI file.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a valid pointer.
enum CmStatus cm_database_open(const char *path, struct CmDatabase **out);

// Number of transactions, or 0 for NULL.
//
// # Safety
// `db` must be NULL or a live handle.
size_t cm_database_len(const struct CmDatabase *db);

// # Safety
// `db` must be NULL or a handle not yet freed.
void cm_database_free(struct CmDatabase *db);

// Sequential mining at relative support `minsup` in (0, 1].
//
// # Safety
// `db` must be a live handle and `out` a valid pointer.
enum CmStatus cm_mine(const struct CmDatabase *db, double minsup, struct CmPatternSet **out);

// Divide-and-conquer mining over `n_partitions` contiguous blocks.
//
// # Safety
// `db` must be a live handle and `out` a valid pointer.
enum CmStatus cm_dac(const struct CmDatabase *db,
                     size_t n_partitions,
                     double minsup,
                     struct CmPatternSet **out);

// Number of patterns, or 0 for NULL.
//
// # Safety
// `ps` must be NULL or a live handle.
size_t cm_patterns_len(const struct CmPatternSet *ps);

// Absolute minimum support the set was mined with.
//
// # Safety
// `ps` must be NULL or a live handle.
size_t cm_patterns_minsup(const struct CmPatternSet *ps);

// # Safety
// `ps` must be a live handle and `support` a valid pointer.
enum CmStatus cm_pattern_support(const struct CmPatternSet *ps, size_t index, size_t *support);

// Borrows the items of closed itemset `index`, sorted ascending.
//
// # Safety
// `ps` must be a live handle; `items` and `len` valid pointers.
enum CmStatus cm_pattern_closed(const struct CmPatternSet *ps,
                                size_t index,
                                const uint32_t **items,
                                size_t *len);

// # Safety
// `ps` must be a live handle and `count` a valid pointer.
enum CmStatus cm_pattern_generator_count(const struct CmPatternSet *ps,
                                         size_t index,
                                         size_t *count);

// Borrows the items of generator `generator` of pattern `index`.
//
// # Safety
// `ps` must be a live handle; `items` and `len` valid pointers.
enum CmStatus cm_pattern_generator(const struct CmPatternSet *ps,
                                   size_t index,
                                   size_t generator,
                                   const uint32_t **items,
                                   size_t *len);

// Renders the set in the CLI text format. Release with [`cm_string_free`].
//
// # Safety
// `ps` must be a live handle and `out` a valid pointer.
enum CmStatus cm_patterns_to_text(const struct CmPatternSet *ps, char **out);

// # Safety
// `ps` must be NULL or a handle not yet freed.
void cm_patterns_free(struct CmPatternSet *ps);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void cm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLOSEDMINE_H */
