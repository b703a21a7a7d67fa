#include "chaoscrypt/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

// Skips whitespace and '#' comments, then reads one header token.
std::string next_token(std::istream& in) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n' && c != '\r') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  std::string token;
  while (c != EOF && !std::isspace(c) && c != '#') {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (token.empty()) throw Error(ErrorCode::MalformedHeader, "unexpected end of header");
  // The single whitespace character after the last token is consumed here;
  // a '#' directly after a token is not allowed.
  if (c == '#') throw Error(ErrorCode::MalformedHeader, "comment glued to header token");
  if (c == EOF) throw Error(ErrorCode::MalformedHeader, "header ends without separator");
  return token;
}

std::size_t parse_number(const std::string& token, const char* field) {
  if (token.empty() || token.size() > 9) throw Error(ErrorCode::MalformedHeader, std::string("bad ") + field);
  std::size_t v = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::MalformedHeader, std::string("non-numeric ") + field + " '" + token + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

}  // namespace

Image read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
    throw Error(ErrorCode::MalformedHeader, "expected binary PGM magic 'P5'");
  const int sep = in.peek();
  if (sep == EOF || !(std::isspace(sep) || sep == '#')) throw Error(ErrorCode::MalformedHeader, "bad magic");
  const std::size_t width = parse_number(next_token(in), "width");
  const std::size_t height = parse_number(next_token(in), "height");
  const std::size_t maxval = parse_number(next_token(in), "maxval");
  if (width == 0 || height == 0) throw Error(ErrorCode::MalformedHeader, "zero image dimension");
  if (maxval == 0) throw Error(ErrorCode::MalformedHeader, "maxval must be positive");
  if (maxval > 255) throw Error(ErrorCode::UnsupportedMaxval, "only 8-bit PGM supported, maxval=" + std::to_string(maxval));
  if (width != height)
    throw Error(ErrorCode::NonSquareImage, std::to_string(width) + "x" + std::to_string(height) + " is not square");
  std::string raster(width * height, '\0');
  if (!in.read(raster.data(), static_cast<std::streamsize>(raster.size())))
    throw Error(ErrorCode::TruncatedRaster, "expected " + std::to_string(raster.size()) + " raster bytes");
  std::vector<Pixel> pixels(raster.size());
  for (std::size_t i = 0; i < raster.size(); ++i) pixels[i] = static_cast<unsigned char>(raster[i]);
  return Image(width, static_cast<std::uint32_t>(maxval + 1), std::move(pixels));
}

Image read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const Image& img) {
  if (img.levels() > 256) throw Error(ErrorCode::UnsupportedMaxval, "only 8-bit PGM supported");
  out << "P5\n" << img.side() << ' ' << img.side() << '\n' << (img.levels() - 1) << '\n';
  std::string raster(img.size(), '\0');
  for (std::size_t i = 0; i < img.size(); ++i) raster[i] = static_cast<char>(img[i]);
  out.write(raster.data(), static_cast<std::streamsize>(raster.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed");
}

void write_pgm(const std::filesystem::path& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string());
  write_pgm(out, img);
}

}  // namespace chaoscrypt
