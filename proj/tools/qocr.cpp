// qocr: asset generation, fixed-point enhancement, classification and
// figure data from the command line.
//
// Exit codes: 0 success, 1 domain/validation error, 2 I/O or format error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "qocr/analysis/analysis.hpp"
#include "qocr/assets/assets.hpp"
#include "qocr/error.hpp"
#include "qocr/imaging/pgm.hpp"
#include "qocr/pipeline/pipeline.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qocr;

constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

struct EnhanceFlags {
  std::string mode = "single";
  int scale_n = 2;
  int shots = 256;
  bool exact = false;
  std::uint64_t seed = 1;
  int recursions = 1;
  double phi = std::numbers::pi / 3.0;
  double psi = std::numbers::pi / 3.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--mode", mode, "single (1-qubit per pixel) or block (n^2 qubits per block)")
        ->check(CLI::IsMember({"single", "block"}));
    cmd.add_option("--n", scale_n, "Upscale factor between low and reference images");
    auto* shots_opt = cmd.add_option("--shots", shots, "Measurement shots per readout");
    cmd.add_flag("--exact", exact, "Read exact probabilities instead of sampling")
        ->excludes(shots_opt);
    cmd.add_option("--seed", seed, "Seed for sampled readout");
    cmd.add_option("--m", recursions, "Fixed-point recursion depth");
    cmd.add_option("--phi", phi, "Oracle phase (radians)");
    cmd.add_option("--psi", psi, "Diffuser phase (radians)");
  }

  pipeline::EnhanceConfig config() const {
    pipeline::EnhanceConfig cfg;
    cfg.mode = mode == "block" ? pipeline::Mode::block : pipeline::Mode::single_qubit;
    cfg.scale_n = scale_n;
    cfg.shots = exact ? 0 : shots;
    if (!exact && shots < 1) throw DomainError("--shots must be at least 1 (use --exact)");
    cfg.seed = seed;
    cfg.params = {phi, psi, recursions};
    cfg.validate();
    return cfg;
  }
};

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  imaging::write_file_bytes(
      path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

imaging::GrayImage read_image(const fs::path& path) {
  try {
    return imaging::read_pgm_file(path);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what(), e.offset());
  }
}

assets::ReferenceSet read_reference_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory", dir.string());
  return assets::ReferenceSet(assets::read_image_dir(dir));
}

int run(int argc, char** argv) {
  CLI::App app{"Fixed-point search enhancement and classification of low-resolution characters"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-assets", "Write reference and low-resolution glyph images");
  fs::path gen_out;
  int gen_upscale = 4;
  int gen_n = 2;
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--upscale", gen_upscale, "Glyph scale for 8x8 bitmaps");
  gen->add_option("--n", gen_n, "Pooling factor for low-resolution images");

  auto* enh = app.add_subcommand("enhance", "Enhance one low-resolution image toward a reference");
  fs::path enh_input, enh_ref, enh_out;
  EnhanceFlags enh_flags;
  enh->add_option("--input", enh_input, "Low-resolution PGM")->required();
  enh->add_option("--ref", enh_ref, "Reference PGM")->required();
  enh->add_option("--out", enh_out, "Output PGM")->required();
  enh_flags.attach(*enh);

  auto* cls = app.add_subcommand("classify", "Identify the character in a low-resolution image");
  fs::path cls_input, cls_refdir, cls_csv;
  EnhanceFlags cls_flags;
  cls->add_option("--input", cls_input, "Low-resolution PGM")->required();
  cls->add_option("--refdir", cls_refdir, "Directory with <char>.pgm references")->required();
  cls->add_option("--csv", cls_csv, "Write the score table here");
  cls_flags.attach(*cls);

  auto* tab = app.add_subcommand("table", "Score every low-resolution character against all references");
  fs::path tab_lowdir, tab_refdir, tab_out;
  EnhanceFlags tab_flags;
  tab->add_option("--lowdir", tab_lowdir, "Directory with <char>.pgm low-resolution images")->required();
  tab->add_option("--refdir", tab_refdir, "Directory with <char>.pgm references")->required();
  tab->add_option("--out", tab_out, "Output CSV")->required();
  tab_flags.attach(*tab);

  auto* hm = app.add_subcommand("heatmap", "Final-vs-target probability mismatch grid");
  std::string hm_algorithm;
  int hm_resolution = 101;
  fs::path hm_out;
  hm->add_option("--algorithm", hm_algorithm, "grover or fixedpoint")
      ->required()
      ->check(CLI::IsMember({"grover", "fixedpoint"}));
  hm->add_option("--resolution", hm_resolution, "Grid points per axis");
  hm->add_option("--out", hm_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  if (*gen) {
    const auto refs = assets::gen_reference(assets::GlyphSet::builtin(), gen_upscale);
    const auto lows = assets::gen_lowres(refs, gen_n);
    assets::write_asset_dir(gen_out, refs, lows);
  } else if (*enh) {
    const auto cfg = enh_flags.config();
    const auto low = read_image(enh_input);
    const auto ref = read_image(enh_ref);
    const auto enhanced = pipeline::enhance(low, ref, cfg);
    imaging::write_pgm_file(enh_out, enhanced);
    std::cout << "match_percent=" << format_real(imaging::match_percent(enhanced, ref)) << '\n';
  } else if (*cls) {
    const auto cfg = cls_flags.config();
    const auto low = read_image(cls_input);
    const auto refs = read_reference_dir(cls_refdir);
    const auto table = pipeline::classify(low, refs, cfg);
    if (!cls_csv.empty()) write_text(cls_csv, analysis::emit_csv(analysis::to_csv(table)));
    std::cout << "best=" << table.best << '\n';
  } else if (*tab) {
    const auto cfg = tab_flags.config();
    if (!fs::is_directory(tab_lowdir)) throw IoError("not a directory", tab_lowdir.string());
    const auto lows = assets::read_image_dir(tab_lowdir);
    const auto refs = read_reference_dir(tab_refdir);
    const auto batch = pipeline::score_table_batch(lows, refs, cfg);
    write_text(tab_out, analysis::emit_csv(analysis::to_csv(batch)));
  } else if (*hm) {
    const auto algorithm =
        hm_algorithm == "grover" ? analysis::Algorithm::grover : analysis::Algorithm::fixed_point;
    const auto grid = analysis::heatmap(algorithm, hm_resolution);
    write_text(hm_out, analysis::emit_csv(analysis::to_csv(grid)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qocr::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const qocr::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qocr::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
