// Copyright 2026 The gt-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtforge/render/orchestrator.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gtforge::render {

namespace {

constexpr std::size_t kMaxLogBytes = 64 * 1024;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string truncate_log(std::string log) {
  if (log.size() > kMaxLogBytes) log.resize(kMaxLogBytes);
  return log;
}

void replace_all(std::string& text, std::string_view key, const std::string& value) {
  std::size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos += value.size();
  }
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

struct CommandResult {
  int exit_code = 0;
  bool timed_out = false;
  std::string output;
};

// Runs through /bin/sh under GNU timeout, merging stderr into the captured
// stream. timeout_seconds == 0 is treated as an immediate timeout.
CommandResult run_command(const std::string& command, const std::filesystem::path& cwd,
                          unsigned timeout_seconds) {
  if (timeout_seconds == 0) return {.exit_code = -1, .timed_out = true};
  std::ostringstream full;
  full << "cd " << shell_quote(cwd.string()) << " && timeout " << timeout_seconds << "s "
       << command << " 2>&1";
  FILE* pipe = popen(full.str().c_str(), "r");
  if (pipe == nullptr) throw Error("popen failed for: " + command);
  CommandResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    if (result.output.size() < kMaxLogBytes) result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else {
    result.exit_code = -1;
  }
  result.timed_out = result.exit_code == 124;  // GNU timeout convention
  result.output = truncate_log(std::move(result.output));
  return result;
}

// Environment override replaces the leading word of a command template.
void override_binary(std::string& command, const char* env_var) {
  const char* value = std::getenv(env_var);
  if (value == nullptr || *value == '\0') return;
  const std::size_t space = command.find(' ');
  command = std::string(value) + (space == std::string::npos ? "" : command.substr(space));
}

std::filesystem::path fixture_subdir(const ToolchainConfig& cfg,
                                     const std::filesystem::path& article_dir) {
  return *cfg.fixture_dir / article_dir.filename();
}

std::filesystem::path find_main_tex(const std::filesystem::path& dir) {
  const std::filesystem::path preferred = dir / "main.tex";
  if (std::filesystem::exists(preferred)) return preferred;
  std::filesystem::path found;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".tex") {
      if (!found.empty()) throw Error("multiple .tex files in " + dir.string());
      found = entry.path();
    }
  }
  if (found.empty()) throw Error("no .tex file in " + dir.string());
  return found;
}

std::vector<std::pair<PageRender, std::string>> fixture_pages(
    const std::filesystem::path& dir) {
  const std::filesystem::path manifest = dir / "pages.json";
  nlohmann::json pages;
  try {
    pages = nlohmann::json::parse(read_file(manifest));
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid fixture manifest " + manifest.string() + ": " + e.what());
  }
  std::vector<std::pair<PageRender, std::string>> out;
  for (const nlohmann::json& entry : pages) {
    PageRender render;
    render.page_number = entry.at("page").get<int>();
    render.width_px = entry.at("width_px").get<int>();
    render.height_px = entry.at("height_px").get<int>();
    render.dpi = entry.at("dpi").get<int>();
    render.image_path = dir / entry.at("image").get<std::string>();
    std::string tsv = read_file(dir / entry.at("tsv").get<std::string>());
    out.emplace_back(std::move(render), std::move(tsv));
  }
  return out;
}

}  // namespace

RenderError::RenderError(Kind kind, std::string log, int page)
    : Error([&] {
        switch (kind) {
          case Kind::CompileFailed:
            return "compilation failed: " + log;
          case Kind::Timeout:
            return std::string("tool timed out");
          case Kind::RasterizeFailed:
            return "rasterization failed: " + log;
          case Kind::OcrFailed:
            return "OCR failed on page " + std::to_string(page) + ": " + log;
        }
        return std::string("render error");
      }()),
      kind(kind),
      page(page),
      log_excerpt(std::move(log)) {}

void apply_env_overrides(ToolchainConfig& cfg) {
  override_binary(cfg.latex_command, "FORGE_LATEX_BIN");
  override_binary(cfg.rasterize_command, "FORGE_RASTER_BIN");
  override_binary(cfg.ocr_command, "FORGE_TESSERACT_BIN");
  if (const char* dpi = std::getenv("FORGE_DPI"); dpi != nullptr && *dpi != '\0') {
    cfg.dpi = std::atoi(dpi);
    if (cfg.dpi <= 0) throw Error("FORGE_DPI must be a positive integer");
  }
}

CompileOutput compile_document(const std::filesystem::path& marked_dir,
                               const ToolchainConfig& cfg) {
  if (cfg.fixture_dir) {
    const std::filesystem::path dir = fixture_subdir(cfg, marked_dir);
    const std::filesystem::path aux = dir / "doc.aux";
    if (!std::filesystem::exists(aux)) {
      throw RenderError(RenderError::Kind::CompileFailed,
                        "fixture aux missing: " + aux.string());
    }
    return {dir / "doc.pdf", read_file(aux)};
  }

  const std::filesystem::path main_tex = find_main_tex(marked_dir);
  std::string command = cfg.latex_command;
  replace_all(command, "{main}", shell_quote(main_tex.filename().string()));
  replace_all(command, "{dpi}", std::to_string(cfg.dpi));

  // Two passes: the position records written into the aux file on the first
  // pass feed the second.
  CommandResult result;
  for (int pass = 0; pass < 2; ++pass) {
    result = run_command(command, marked_dir, cfg.timeout_seconds);
    if (result.timed_out) throw RenderError(RenderError::Kind::Timeout, "");
    if (result.exit_code != 0) {
      throw RenderError(RenderError::Kind::CompileFailed, result.output);
    }
  }

  std::filesystem::path pdf = main_tex;
  pdf.replace_extension(".pdf");
  std::filesystem::path aux = main_tex;
  aux.replace_extension(".aux");
  if (!std::filesystem::exists(pdf) || !std::filesystem::exists(aux)) {
    throw RenderError(RenderError::Kind::CompileFailed,
                      "compiler exited cleanly but output files are missing\n" +
                          result.output);
  }
  return {pdf, read_file(aux)};
}

std::vector<std::pair<PageRender, std::string>> render_and_ocr(
    const std::filesystem::path& pdf_path, const ToolchainConfig& cfg) {
  if (cfg.fixture_dir) {
    return fixture_pages(pdf_path.parent_path());
  }

  const std::filesystem::path dir = pdf_path.parent_path();
  const std::string prefix = "page";
  std::string raster = cfg.rasterize_command;
  replace_all(raster, "{dpi}", std::to_string(cfg.dpi));
  replace_all(raster, "{pdf}", shell_quote(pdf_path.filename().string()));
  replace_all(raster, "{prefix}", prefix);
  CommandResult result = run_command(raster, dir, cfg.timeout_seconds);
  if (result.timed_out) throw RenderError(RenderError::Kind::Timeout, "");
  if (result.exit_code != 0) {
    throw RenderError(RenderError::Kind::RasterizeFailed, result.output);
  }

  // pdftoppm writes page-1.png, page-2.png, ... (zero padding varies).
  std::vector<std::filesystem::path> images;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix + "-", 0) == 0 && entry.path().extension() == ".png") {
      images.push_back(entry.path());
    }
  }
  std::sort(images.begin(), images.end());

  std::vector<std::pair<PageRender, std::string>> out;
  int page_number = 0;
  for (const std::filesystem::path& image : images) {
    ++page_number;
    PageRender render;
    render.page_number = page_number;
    render.image_path = image;
    render.dpi = cfg.dpi;
    std::tie(render.width_px, render.height_px) = png_dimensions(image);

    std::filesystem::path out_base = image;
    out_base.replace_extension("");
    std::string ocr = cfg.ocr_command;
    replace_all(ocr, "{image}", shell_quote(image.filename().string()));
    replace_all(ocr, "{out_base}", shell_quote(out_base.filename().string()));
    replace_all(ocr, "{dpi}", std::to_string(cfg.dpi));
    result = run_command(ocr, dir, cfg.timeout_seconds);
    if (result.timed_out) throw RenderError(RenderError::Kind::Timeout, "");
    if (result.exit_code != 0) {
      throw RenderError(RenderError::Kind::OcrFailed, result.output, page_number);
    }
    std::filesystem::path tsv = out_base;
    tsv += ".tsv";
    out.emplace_back(std::move(render), read_file(tsv));
  }
  return out;
}

std::pair<int, int> png_dimensions(const std::filesystem::path& png) {
  std::ifstream in(png, std::ios::binary);
  unsigned char header[24];
  if (!in.read(reinterpret_cast<char*>(header), sizeof(header))) {
    throw Error("cannot read PNG header of " + png.string());
  }
  static const unsigned char magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  for (int i = 0; i < 8; ++i) {
    if (header[i] != magic[i]) throw Error(png.string() + " is not a PNG file");
  }
  const auto be32 = [&](int offset) {
    return (header[offset] << 24) | (header[offset + 1] << 16) |
           (header[offset + 2] << 8) | header[offset + 3];
  };
  return {be32(16), be32(20)};
}

}  // namespace gtforge::render
