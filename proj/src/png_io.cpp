#include "ovt/png.hpp"

#include <png.h>

#include <cstring>
#include <string>

#include "ovt/error.hpp"

namespace ovt {

namespace {

void on_error(png_structp png, png_const_charp message) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  *what = message;
  png_longjmp(png, 1);
}

void on_warning(png_structp, png_const_charp) {}

struct Reader {
  std::span<const std::uint8_t> data;
  std::size_t offset = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_png16(const Image16& image, std::span<const std::uint8_t> icc_profile) {
  if (image.width <= 0 || image.height <= 0 ||
      image.rgb.size() != static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height) * 3) {
    throw Error("image dimensions do not match its pixel buffer");
  }
  std::string what;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &what, on_error, on_warning);
  if (!png) throw Error("cannot create PNG writer");
  png_infop info = png_create_info_struct(png);
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> row(static_cast<std::size_t>(image.width) * 6);

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error("PNG encoding failed: " + what);
  }
  png_set_write_fn(
      png, &out,
      [](png_structp p, png_bytep data, png_size_t length) {
        auto* buffer = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(p));
        buffer->insert(buffer->end(), data, data + length);
      },
      nullptr);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height),
               16, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  if (!icc_profile.empty()) {
    png_set_iCCP(png, info, "embedded", PNG_COMPRESSION_TYPE_BASE, icc_profile.data(),
                 static_cast<png_uint_32>(icc_profile.size()));
  }
  png_write_info(png, info);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width * 3; ++x) {
      std::uint16_t v = image.rgb[image.index(0, y) + static_cast<std::size_t>(x)];
      row[static_cast<std::size_t>(x) * 2] = static_cast<std::uint8_t>(v >> 8);
      row[static_cast<std::size_t>(x) * 2 + 1] = static_cast<std::uint8_t>(v & 0xff);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

Image16 decode_png16(std::span<const std::uint8_t> data) {
  if (data.size() < 8 || png_sig_cmp(data.data(), 0, 8) != 0) throw Error("not a PNG stream");
  std::string what;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &what, on_error, on_warning);
  if (!png) throw Error("cannot create PNG reader");
  png_infop info = png_create_info_struct(png);
  Reader reader{data, 0};
  Image16 image;
  std::vector<std::uint8_t> row;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error("PNG decoding failed: " + what);
  }
  png_set_read_fn(png, &reader, [](png_structp p, png_bytep out, png_size_t length) {
    auto* r = static_cast<Reader*>(png_get_io_ptr(p));
    if (r->offset + length > r->data.size()) png_error(p, "truncated stream");
    std::memcpy(out, r->data.data() + r->offset, length);
    r->offset += length;
  });
  png_read_info(png, info);
  if (png_get_bit_depth(png, info) != 16 || png_get_color_type(png, info) != PNG_COLOR_TYPE_RGB) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error("expected a 16-bit RGB PNG");
  }
  image.width = static_cast<int>(png_get_image_width(png, info));
  image.height = static_cast<int>(png_get_image_height(png, info));
  image.rgb.resize(static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height) * 3);
  row.resize(png_get_rowbytes(png, info));
  for (int y = 0; y < image.height; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < image.width * 3; ++x) {
      auto k = static_cast<std::size_t>(x) * 2;
      image.rgb[image.index(0, y) + static_cast<std::size_t>(x)] =
          static_cast<std::uint16_t>((row[k] << 8) | row[k + 1]);
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

}  // namespace ovt
