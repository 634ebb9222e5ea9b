#include "wmark/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace wmark {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// ---- PPM (P6) ----

int ppm_token(const std::vector<std::uint8_t>& buf, std::size_t& pos) {
  while (pos < buf.size()) {
    if (std::isspace(buf[pos])) {
      ++pos;
    } else if (buf[pos] == '#') {
      while (pos < buf.size() && buf[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  int v = 0;
  bool any = false;
  while (pos < buf.size() && std::isdigit(buf[pos])) {
    v = v * 10 + (buf[pos] - '0');
    ++pos;
    any = true;
  }
  if (!any) throw io_error("malformed PPM header");
  return v;
}

Raster load_ppm(const std::vector<std::uint8_t>& buf, const std::string& path) {
  std::size_t pos = 2;
  const int w = ppm_token(buf, pos);
  const int h = ppm_token(buf, pos);
  const int maxval = ppm_token(buf, pos);
  if (maxval != 255) throw io_error("only 8-bit PPM supported: " + path);
  ++pos;  // single whitespace after maxval
  const std::size_t need = static_cast<std::size_t>(w) * h * 3;
  if (buf.size() - pos < need) throw io_error("truncated PPM: " + path);
  Raster img(w, h);
  std::memcpy(img.data.data(), buf.data() + pos, need);
  return img;
}

// ---- BMP (24-bit uncompressed) ----

std::uint32_t rd32(const std::uint8_t* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (std::uint32_t(p[3]) << 24);
}
std::uint16_t rd16(const std::uint8_t* p) { return p[0] | (p[1] << 8); }

Raster load_bmp(const std::vector<std::uint8_t>& buf, const std::string& path) {
  if (buf.size() < 54) throw io_error("truncated BMP: " + path);
  const std::uint32_t data_off = rd32(&buf[10]);
  const std::int32_t w = std::int32_t(rd32(&buf[18]));
  const std::int32_t h_signed = std::int32_t(rd32(&buf[22]));
  const std::uint16_t bpp = rd16(&buf[28]);
  const std::uint32_t compression = rd32(&buf[30]);
  if (bpp != 24 || compression != 0)
    throw io_error("only 24-bit uncompressed BMP supported: " + path);
  const bool bottom_up = h_signed > 0;
  const int h = bottom_up ? h_signed : -h_signed;
  const std::size_t stride = (static_cast<std::size_t>(w) * 3 + 3) & ~std::size_t(3);
  if (buf.size() < data_off + stride * h) throw io_error("truncated BMP: " + path);
  Raster img(w, h);
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* row = buf.data() + data_off + stride * (bottom_up ? h - 1 - y : y);
    for (int x = 0; x < w; ++x) {
      img.at(y, x, 0) = row[3 * x + 2];  // BMP stores BGR
      img.at(y, x, 1) = row[3 * x + 1];
      img.at(y, x, 2) = row[3 * x + 0];
    }
  }
  return img;
}

// ---- PNG via libpng ----

Raster load_png(const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw io_error("cannot open " + path);
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw io_error("failed to decode PNG: " + path);
  }
  png_init_io(png, fp);
  png_read_info(png, info);
  png_set_strip_16(png);
  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);
  const int w = int(png_get_image_width(png, info));
  const int h = int(png_get_image_height(png, info));
  Raster img(w, h);
  std::vector<png_bytep> rows(h);
  for (int y = 0; y < h; ++y) rows[y] = img.data.data() + static_cast<std::size_t>(y) * w * 3;
  png_read_image(png, rows.data());
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

}  // namespace

Raster load_image(const std::string& path) {
  std::vector<std::uint8_t> head;
  {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    head.resize(8);
    f.read(reinterpret_cast<char*>(head.data()), 8);
    head.resize(static_cast<std::size_t>(f.gcount()));
  }
  static const std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  if (head.size() >= 8 && std::memcmp(head.data(), png_sig, 8) == 0) return load_png(path);
  if (head.size() >= 2 && head[0] == 'P' && head[1] == '6') return load_ppm(read_file(path), path);
  if (head.size() >= 2 && head[0] == 'B' && head[1] == 'M') return load_bmp(read_file(path), path);
  throw io_error("unrecognized image format: " + path);
}

void save_ppm(const Raster& img, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot write " + path);
  f << "P6\n" << img.width << " " << img.height << "\n255\n";
  f.write(reinterpret_cast<const char*>(img.data.data()), std::streamsize(img.data.size()));
  if (!f) throw io_error("write failed: " + path);
}

void save_png(const Raster& img, const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw io_error("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw io_error("failed to encode PNG: " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<png_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y)
    rows[y] = const_cast<png_bytep>(img.data.data() + static_cast<std::size_t>(y) * img.width * 3);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

void save_image(const Raster& img, const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".png") {
    save_png(img, path);
  } else if (ext == ".ppm") {
    save_ppm(img, path);
  } else {
    throw io_error("unsupported output format (use .png or .ppm): " + path);
  }
}

}  // namespace wmark
