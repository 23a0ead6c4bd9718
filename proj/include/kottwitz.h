/* C interface to the kottwitz library. Every function that can fail
 * returns a kw_status; on failure kw_last_error() describes the problem for
 * the calling thread. Strings returned by the library are freed with
 * kw_string_free. */
#ifndef KOTTWITZ_H
#define KOTTWITZ_H

#if defined(KOTTWITZ_BUILDING)
#define KW_API __attribute__((visibility("default")))
#else
#define KW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kw_status {
  KW_OK = 0,
  KW_ERR_INTERNAL = 1,
  KW_ERR_VALIDATION = 2,
  KW_ERR_PRECONDITION = 3,
  KW_ERR_PARSE = 4
} kw_status;

typedef struct kw_group kw_group;
typedef struct kw_report kw_report;

KW_API const char* kw_version(void);

KW_API kw_status kw_group_from_preset(const char* name, kw_group** out);
/* YAML text: `preset: GL(2)` or explicit rank/roots/coroots/simple/frobenius. */
KW_API kw_status kw_group_from_config(const char* yaml_text, kw_group** out);
KW_API void kw_group_free(kw_group* g);
/* Caller frees the result. */
KW_API char* kw_group_label(const kw_group* g);

/* options_json is a JSON object such as {"mu":"1,0","level":"hyperspecial"};
 * NULL means no options. A report is produced on success and on failure
 * (as a structured diagnostic); its status is also the return value. */
KW_API kw_status kw_run(const kw_group* g, const char* command, const char* options_json, kw_report** out);
KW_API kw_status kw_report_status(const kw_report* r);
/* Sorted-key JSON; pretty != 0 indents by two spaces. Caller frees. */
KW_API char* kw_report_json(const kw_report* r, int pretty);
KW_API void kw_report_free(kw_report* r);

/* Diagnostic for the last failure on this thread, as a JSON object with
 * "kind", "message" and "violations". Valid until the next call. */
KW_API const char* kw_last_error(void);

KW_API void kw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
