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

#ifndef GTFORGE_RENDER_ORCHESTRATOR_HPP_
#define GTFORGE_RENDER_ORCHESTRATOR_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtforge/common.hpp"

namespace gtforge::render {

// External tool configuration. When fixture_dir is set no subprocess is ever
// spawned: compile and OCR results come from committed files, keyed by the
// article directory name.
struct ToolchainConfig {
  std::string latex_command = "pdflatex -interaction=nonstopmode {main}";
  std::string rasterize_command = "pdftoppm -png -r {dpi} {pdf} {prefix}";
  std::string ocr_command = "tesseract {image} {out_base} --dpi {dpi} tsv";
  int dpi = 300;
  unsigned timeout_seconds = 120;
  std::optional<std::filesystem::path> fixture_dir;
};

// Environment overrides: FORGE_LATEX_BIN, FORGE_RASTER_BIN,
// FORGE_TESSERACT_BIN replace the leading word of the respective command;
// FORGE_DPI replaces dpi.
void apply_env_overrides(ToolchainConfig& cfg);

struct PageRender {
  int page_number = 1;  // 1-based
  std::filesystem::path image_path;
  int width_px = 0;
  int height_px = 0;
  int dpi = 300;
};

class RenderError : public Error {
 public:
  enum class Kind { CompileFailed, Timeout, RasterizeFailed, OcrFailed };
  RenderError(Kind kind, std::string log_excerpt, int page = 0);
  Kind kind;
  int page;                 // OcrFailed only
  std::string log_excerpt;  // captured output, truncated to 64 KiB
};

struct CompileOutput {
  std::filesystem::path pdf_path;
  std::string aux_text;
};

// Compiles the marked sources in `marked_dir` (two passes, so position
// records settle in the aux file) and returns the rendered PDF plus the
// auxiliary file text. Fixture mode returns the committed pdf/aux verbatim.
CompileOutput compile_document(const std::filesystem::path& marked_dir,
                               const ToolchainConfig& cfg);

// Rasterizes each PDF page at cfg.dpi and runs the OCR engine on it,
// yielding one (render, TSV text) pair per page. Fixture mode returns the
// committed geometry and TSVs.
std::vector<std::pair<PageRender, std::string>> render_and_ocr(
    const std::filesystem::path& pdf_path, const ToolchainConfig& cfg);

// Reads width/height from a PNG header. Throws Error on malformed files.
std::pair<int, int> png_dimensions(const std::filesystem::path& png);

}  // namespace gtforge::render

#endif  // GTFORGE_RENDER_ORCHESTRATOR_HPP_
