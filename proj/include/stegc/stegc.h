/*
 * stegc - image steganography codec
 *
 * Key-gated blue-channel embedding over lossless 24-bit RGB images, an LSB-k
 * baseline codec, and PSNR/MSE fidelity metrics, behind a plain C interface.
 *
 * Conventions:
 *   - Functions that can fail return stegc_status; STEGC_OK is 0. A detail
 *     message for the most recent failure on the calling thread is available
 *     via stegc_last_error_message().
 *   - stegc_image is an opaque handle. Handles returned through an out
 *     parameter are owned by the caller and released with stegc_image_destroy.
 *   - Byte buffers returned through out parameters are released with
 *     stegc_free. Out parameters are written only on STEGC_OK.
 *   - Images are plain values: every operation either leaves its inputs
 *     untouched or returns a new handle. Distinct handles may be used from
 *     different threads concurrently.
 */

#ifndef STEGC_H
#define STEGC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STEGC_API __declspec(dllexport)
#else
#define STEGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stegc_status {
  STEGC_OK = 0,
  STEGC_ERR_INVALID_ARGUMENT = 1,
  STEGC_ERR_MALFORMED_HEADER = 2,
  STEGC_ERR_TRUNCATED_DATA = 3,
  STEGC_ERR_UNSUPPORTED_DEPTH = 4,
  STEGC_ERR_UNSUPPORTED_COLOR_TYPE = 5,
  STEGC_ERR_UNSUPPORTED_FORMAT = 6,
  STEGC_ERR_CAPACITY_EXCEEDED = 7,
  STEGC_ERR_CONTAINS_TERMINATOR = 8,
  STEGC_ERR_KEY_MISMATCH = 9,
  STEGC_ERR_MISSING_TERMINATOR = 10,
  STEGC_ERR_DIMENSION_MISMATCH = 11,
  STEGC_ERR_INDEX_OUT_OF_RANGE = 12,
  STEGC_ERR_LENGTH_EXCEEDS_CAPACITY = 13,
  STEGC_ERR_IO = 14
} stegc_status;

typedef enum stegc_format {
  STEGC_FORMAT_PPM = 0, /* binary PPM (P6), maxval 255 */
  STEGC_FORMAT_PNG = 1  /* 8-bit truecolor PNG */
} stegc_format;

/* Sentinel byte closing the key and message segments of the blue-channel
 * layout. Keys and messages must not contain it. */
#define STEGC_TERMINATOR 0x00u

/* Set by decode when a source alpha channel was dropped. */
#define STEGC_DECODE_ALPHA_STRIPPED 0x1u

typedef struct stegc_image stegc_image;

STEGC_API const char* stegc_version(void);

/* Short kebab-case name of a status code, e.g. "capacity-exceeded". */
STEGC_API const char* stegc_status_name(stegc_status status);

/* Detail message of the calling thread's most recent failure. Valid until the
 * next stegc call on the same thread. */
STEGC_API const char* stegc_last_error_message(void);

/* ---- image lifecycle ---------------------------------------------------- */

/* Creates a width x height image with every pixel set to (r, g, b). */
STEGC_API stegc_status stegc_image_create(uint32_t width, uint32_t height, uint8_t r,
                                          uint8_t g, uint8_t b, stegc_image** image_out);
STEGC_API stegc_status stegc_image_clone(const stegc_image* image, stegc_image** image_out);
STEGC_API void stegc_image_destroy(stegc_image* image);

STEGC_API uint32_t stegc_image_width(const stegc_image* image);
STEGC_API uint32_t stegc_image_height(const stegc_image* image);
STEGC_API uint64_t stegc_image_pixel_count(const stegc_image* image);

/* Pixel access by row-major index. */
STEGC_API stegc_status stegc_image_get_rgb(const stegc_image* image, uint64_t pixel,
                                           uint8_t* r, uint8_t* g, uint8_t* b);
STEGC_API stegc_status stegc_image_set_rgb(stegc_image* image, uint64_t pixel, uint8_t r,
                                           uint8_t g, uint8_t b);
STEGC_API stegc_status stegc_image_get_blue(const stegc_image* image, uint64_t pixel,
                                            uint8_t* blue_out);
STEGC_API stegc_status stegc_image_set_blue(stegc_image* image, uint64_t pixel,
                                            uint8_t value);

/* 1 if both images have identical dimensions and channel values, else 0. */
STEGC_API int stegc_image_equal(const stegc_image* a, const stegc_image* b);

/* ---- decode / encode ----------------------------------------------------
 * Decoding is bit-exact: channel values come straight from the file and
 * non-8-bit or non-truecolor inputs are rejected, never coerced. flags_out
 * may be NULL; on success it receives STEGC_DECODE_* bits. */

STEGC_API stegc_status stegc_image_decode(const uint8_t* bytes, size_t size,
                                          stegc_format format, uint32_t* flags_out,
                                          stegc_image** image_out);
STEGC_API stegc_status stegc_image_encode(const stegc_image* image, stegc_format format,
                                          uint8_t** bytes_out, size_t* size_out);

/* Loads a file, sniffing the format from its magic bytes. */
STEGC_API stegc_status stegc_image_read_file(const char* path, uint32_t* flags_out,
                                             stegc_image** image_out);
STEGC_API stegc_status stegc_image_write_file(const stegc_image* image, const char* path,
                                              stegc_format format);

STEGC_API void stegc_free(void* ptr);

/* ---- first-component codec ----------------------------------------------
 * Embeds key bytes, a terminator, message bytes, and a terminator into the
 * blue channels of consecutive row-major pixels starting at pixel 0. Red and
 * green channels are never touched. Extraction re-scans the key segment and
 * releases the message only when the supplied key matches. */

/* Largest embeddable message in bytes: max(0, pixels - key_size - 2). */
STEGC_API uint64_t stegc_capacity(const stegc_image* cover, size_t key_size);

/* STEGC_OK iff no byte equals STEGC_TERMINATOR; otherwise the offset of the
 * first offender is stored in bad_offset_out (may be NULL). */
STEGC_API stegc_status stegc_validate_segment(const uint8_t* bytes, size_t size,
                                              size_t* bad_offset_out);

STEGC_API stegc_status stegc_embed(const stegc_image* cover, const uint8_t* key,
                                   size_t key_size, const uint8_t* message,
                                   size_t message_size, stegc_image** stego_out);
STEGC_API stegc_status stegc_extract(const stegc_image* stego, const uint8_t* key,
                                     size_t key_size, uint8_t** message_out,
                                     size_t* message_size_out);

/* Pixel indices of the embedded layout: key bytes occupy [key_begin,
 * key_term), message bytes [msg_begin, msg_term). */
typedef struct stegc_layout {
  uint64_t key_begin;
  uint64_t key_term;
  uint64_t msg_begin;
  uint64_t msg_term;
} stegc_layout;

/* Locates the two terminators without key verification. */
STEGC_API stegc_status stegc_detect_layout(const stegc_image* stego, stegc_layout* layout_out);

/* ---- LSB-k baseline codec -------------------------------------------------
 * Replaces the k low bits (k in 1..3) of each channel byte, walking channels
 * blue, green, red within each row-major pixel. A 32-bit big-endian length
 * prefix frames the payload, so any byte values are legal. */

STEGC_API uint64_t stegc_lsb_capacity_bits(const stegc_image* image, unsigned bits_per_byte);
STEGC_API uint64_t stegc_lsb_capacity_bytes(const stegc_image* image, unsigned bits_per_byte);
STEGC_API stegc_status stegc_lsb_embed(const stegc_image* cover, unsigned bits_per_byte,
                                       const uint8_t* message, size_t message_size,
                                       stegc_image** stego_out);
STEGC_API stegc_status stegc_lsb_extract(const stegc_image* stego, unsigned bits_per_byte,
                                         uint8_t** message_out, size_t* message_size_out);

/* ---- fidelity metrics ---------------------------------------------------- */

typedef struct stegc_fidelity {
  double mse;     /* mean squared error over all 3*w*h channel samples */
  double rmse;    /* sqrt(mse) */
  double psnr_db; /* 20*log10(maxpix/rmse); +infinity when mse == 0 */
  uint64_t samples;
  uint64_t changed_red;
  uint64_t changed_green;
  uint64_t changed_blue;
  int64_t first_diff_pixel; /* row-major index of first differing pixel, -1 if none */
} stegc_fidelity;

/* Compares two same-sized images with maxpix fixed at 255. */
STEGC_API stegc_status stegc_fidelity_compute(const stegc_image* a, const stegc_image* b,
                                              stegc_fidelity* fidelity_out);

/* 20*log10(maxpix/sqrt(mse)); +infinity when mse == 0. NaN on bad input. */
STEGC_API double stegc_psnr_from_mse(double mse, double maxpix);

#ifdef __cplusplus
}
#endif

#endif /* STEGC_H */
