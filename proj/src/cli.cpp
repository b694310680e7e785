#include "tatami/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "tatami/core.hpp"
#include "tatami/counting.hpp"
#include "tatami/errors.hpp"
#include "tatami/maxmono.hpp"
#include "tatami/oracle.hpp"
#include "tatami/render.hpp"
#include "tatami/structure.hpp"

namespace tatami::cli {

namespace {

namespace fs = std::filesystem;

enum class OutFormat { Text, Ascii, Svg };

const std::map<std::string, OutFormat> kFormats = {
    {"text", OutFormat::Text}, {"ascii", OutFormat::Ascii}, {"svg", OutFormat::Svg}};

std::string format_tiling(const Tiling& t, OutFormat f) {
  switch (f) {
    case OutFormat::Text:
      return encode(t);
    case OutFormat::Ascii:
      return render_ascii(t);
    case OutFormat::Svg: {
      RenderOptions opts;
      opts.format = RenderFormat::Svg;
      return render_svg(t, opts);
    }
  }
  return {};
}

const char* extension(OutFormat f) {
  switch (f) {
    case OutFormat::Text:
      return ".tatami";
    case OutFormat::Ascii:
      return ".txt";
    case OutFormat::Svg:
      return ".svg";
  }
  return "";
}

// Writes tilings one at a time, either to `out` separated by blank lines or
// to numbered files in a directory.
class Emitter {
 public:
  Emitter(std::ostream& out, OutFormat format, std::optional<fs::path> dir)
      : out_(out), format_(format), dir_(std::move(dir)) {
    if (dir_) fs::create_directories(*dir_);
  }

  void operator()(const Tiling& t) {
    const std::string text = format_tiling(t, format_);
    ++count_;
    if (dir_) {
      std::ostringstream name;
      name << "tiling_" << std::setw(6) << std::setfill('0') << count_ << extension(format_);
      std::ofstream file(*dir_ / name.str(), std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + (*dir_ / name.str()).string());
      file << text;
      return;
    }
    if (count_ > 1) out_ << '\n';
    out_ << text;
  }

  std::uint64_t count() const { return count_; }

 private:
  std::ostream& out_;
  OutFormat format_;
  std::optional<fs::path> dir_;
  std::uint64_t count_ = 0;
};

Tiling read_tiling(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode(buf.str());
}

void require_n(int n, int lo) {
  if (n < lo) throw DomainError("n must be at least " + std::to_string(lo) + ", got " + std::to_string(n));
}

int verify(int max_n, std::ostream& out) {
  if (max_n < 1 || max_n > oracle::kMaxN) {
    throw DomainError("verify needs 1 <= max-n <= " + std::to_string(oracle::kMaxN));
  }
  bool all_ok = true;
  out << "n\tm\toracle\tformula\tconstructive\n";
  for (int n = 1; n <= max_n; ++n) {
    const auto by_m = oracle::count_by_monomers(n);
    for (int m = n % 2; m <= n; m += 2) {
      const auto it = by_m.find(m);
      const std::uint64_t brute = it == by_m.end() ? 0 : it->second;
      const auto formula = counting::count_tilings(n, m);
      std::uint64_t built = 0;
      if (m < n) {
        enumerate_class(n, m, [&](const Tiling&) { ++built; });
      } else if (n >= 2) {
        built = maxmono::generate_all_max(n, [](const Tiling&) {}).tilings;
      } else {
        built = 1;  // the single monomer
      }
      const bool ok = formula == brute && formula == built;
      all_ok = all_ok && ok;
      out << n << '\t' << m << '\t' << brute << '\t' << formula << '\t' << built << (ok ? "" : "\tMISMATCH") << '\n';
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomer-dimer tatami tilings of square grids", "tatami"};
  app.require_subcommand(1);

  int n = 0;
  int m = -1;
  int k = 0;
  int max_n = 0;
  int cell_size = 24;
  bool gray = false;
  bool fixed_corners = false;
  bool ascii_only = false;
  bool highlight = false;
  OutFormat format = OutFormat::Text;
  std::string render_format = "ascii";
  std::string out_dir;
  std::string file;
  std::string rep_text;

  auto* count = app.add_subcommand("count", "Number of tilings with m monomers (all m if omitted)");
  count->add_option("--n", n, "Grid size")->required();
  count->add_option("--m", m, "Monomer count");

  auto* total = app.add_subcommand("total", "Total number of tilings");
  total->add_option("--n", n)->required();

  auto* distance = app.add_subcommand("distance", "Tilings whose bidimer or vortex sits at ring distance k");
  distance->add_option("--n", n)->required();
  distance->add_option("--k", k)->required();

  auto* gen = app.add_subcommand("gen", "Generate all tilings with m monomers");
  gen->add_option("--n", n)->required();
  gen->add_option("--m", m)->required();
  gen->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  gen->add_option("--out", out_dir, "Write one file per tiling into this directory");

  auto* gen_max = app.add_subcommand("gen-max", "Generate tilings with n monomers");
  gen_max->add_option("--n", n)->required();
  gen_max->add_flag("--gray", gray, "One diagonal flip between consecutive tilings (even n)");
  gen_max->add_flag("--fixed-corners", fixed_corners, "Only tilings with monomers in both upper corners");
  gen_max->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));
  gen_max->add_option("--out", out_dir);

  auto* validate = app.add_subcommand("validate", "Check a tiling file");
  validate->add_option("file", file)->required();

  auto* render_cmd = app.add_subcommand("render", "Draw a tiling file");
  render_cmd->add_option("file", file)->required();
  render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--cell-size", cell_size)->check(CLI::PositiveNumber);
  render_cmd->add_flag("--ascii-only", ascii_only, "Plain ASCII glyphs");
  render_cmd->add_flag("--highlight", highlight, "Highlight detected feature sources");

  auto* verify_cmd = app.add_subcommand("verify", "Compare brute force, formulas and construction");
  verify_cmd->add_option("--max-n", max_n)->required();

  auto* compositions = app.add_subcommand("compositions", "Sum of squared parts over all compositions of n");
  compositions->add_option("--n", n)->required();

  auto* decode_rep = app.add_subcommand("decode-rep", "Tiling of a ternary representation like (0,-1)·(1,0)");
  decode_rep->add_option("--n", n)->required();
  decode_rep->add_option("rep", rep_text)->required();
  decode_rep->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) {
      if (count->count("--m") > 0) {
        out << counting::count_tilings(n, m) << '\n';
      } else {
        const auto table = counting::count_table(n);
        for (int mm = 0; mm <= n; ++mm) {
          if (table.count(mm) != 0) out << mm << '\t' << table.count(mm) << '\n';
        }
      }
    } else if (total->parsed()) {
      out << counting::total_tilings(n) << '\n';
    } else if (distance->parsed()) {
      out << counting::count_at_distance(n, k) << '\n';
    } else if (gen->parsed()) {
      require_n(n, 1);
      if (m < 0 || m > n) throw DomainError("m must satisfy 0 <= m <= n");
      Emitter emit(out, format, out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir));
      if ((n - m) % 2 != 0) {
        // No tilings of this parity.
      } else if (m < n) {
        enumerate_class(n, m, std::ref(emit));
      } else if (n == 1) {
        emit(Tiling(1, {{TileKind::Monomer, {0, 0}}}));
      } else {
        maxmono::generate_all_max(n, std::ref(emit));
      }
    } else if (gen_max->parsed()) {
      require_n(n, 2);
      Emitter emit(out, format, out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir));
      if (gray) {
        maxmono::gray_generate(n, [&](const Tiling& t, const maxmono::TernaryRep&, const auto&) { emit(t); });
      } else if (fixed_corners) {
        maxmono::generate_fixed_corner(n, [&](const Tiling& t, const maxmono::TernaryRep&) { emit(t); });
      } else {
        maxmono::generate_all_max(n, std::ref(emit));
      }
    } else if (validate->parsed()) {
      const Tiling t = read_tiling(file);
      const auto violations = validate_tatami(t);
      if (!violations.empty()) {
        for (const auto& v : violations) {
          out << "four tiles meet at (" << v.point.x << ", " << v.point.y << ")\n";
        }
        return 1;
      }
      out << "ok n=" << t.n() << " monomers=" << monomer_count(t) << '\n';
      for (const Feature& f : detect_features(t)) out << to_string(f) << '\n';
    } else if (render_cmd->parsed()) {
      const Tiling t = read_tiling(file);
      RenderOptions opts;
      opts.format = render_format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
      opts.cell_size = cell_size;
      opts.ascii_only = ascii_only;
      if (highlight) opts.features = detect_features(t);
      out << render(t, opts);
    } else if (verify_cmd->parsed()) {
      return verify(max_n, out);
    } else if (compositions->parsed()) {
      out << counting::composition_square_sum(n) << '\n';
    } else if (decode_rep->parsed()) {
      require_n(n, 2);
      out << format_tiling(maxmono::decode(maxmono::parse_rep(n, rep_text)), format);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tatami::cli
