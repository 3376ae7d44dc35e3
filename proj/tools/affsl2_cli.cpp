// Command-line front end: tables, single entries, the verification suite and
// cache maintenance.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "affsl2/cache.hpp"
#include "affsl2/errors.hpp"
#include "affsl2/render.hpp"
#include "affsl2/tables.hpp"
#include "affsl2/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadRequest = 2;
constexpr int kExitInternal = 3;

std::optional<std::string> default_cache_path() {
  if (char const* env = std::getenv(affsl2::kCacheEnvVar); env != nullptr && *env != '\0') return std::string(env);
  return std::nullopt;
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw affsl2::IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string theory = "k-equivariant";
  std::string n = "1";
  std::string m = "1";
  std::int64_t kmax = 4;
  std::int64_t k = 0;
  std::string format = "plain";
  std::string cache;
  std::string level = "quick";
  std::string cache_action;
};

std::optional<std::string> cache_path(Options const& o) {
  if (!o.cache.empty()) return o.cache;
  return default_cache_path();
}

int cmd_table(Options const& o) {
  affsl2::TableRequest req;
  req.theory = affsl2::parse_theory(o.theory);
  req.n = affsl2::parse_range(o.n);
  req.m = affsl2::parse_range(o.m);
  req.kmax = o.kmax;
  req.format = affsl2::parse_format(o.format);
  req.cache_path = cache_path(o);
  req.validate();

  affsl2::Tables tables;
  if (req.cache_path) affsl2::cache_load(tables, *req.cache_path);
  std::ostringstream out;
  affsl2::render_table(tables, req, out);
  if (req.cache_path) affsl2::cache_store(tables, *req.cache_path);
  std::cout << out.str();
  return kExitOk;
}

int cmd_entry(Options const& o) {
  auto const theory = affsl2::parse_theory(o.theory);
  auto const format = affsl2::parse_format(o.format);
  auto const n = affsl2::parse_range(o.n);
  auto const m = affsl2::parse_range(o.m);
  if (n.lo != n.hi || m.lo != m.hi) throw affsl2::BadRequest("entry takes single indices for --n and --m");
  if (o.k < 0) throw affsl2::BadRequest("--k must be nonnegative");

  affsl2::Tables tables;
  auto const path = cache_path(o);
  if (path) affsl2::cache_load(tables, *path);
  std::ostringstream out;
  affsl2::render_entry(tables, theory, n.lo, m.lo, o.k, format, out);
  if (path) affsl2::cache_store(tables, *path);
  std::cout << out.str();
  return kExitOk;
}

int cmd_verify(Options const& o) {
  auto const level = affsl2::parse_level(o.level);
  affsl2::Tables tables;
  auto const path = cache_path(o);
  if (path) affsl2::cache_load(tables, *path);
  affsl2::VerifyReport report = affsl2::run_verify(level, tables, &std::cout);
  affsl2::print_summary(report, std::cout);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_cache(Options const& o) {
  auto const path = cache_path(o);
  if (!path) throw affsl2::BadRequest("no cache path: pass --cache or set " + std::string(affsl2::kCacheEnvVar));
  if (o.cache_action == "clear") {
    std::error_code ec;
    std::filesystem::remove(*path, ec);
    if (ec) throw affsl2::IoError("cannot remove " + *path + ": " + ec.message());
    std::cout << "cleared " << *path << "\n";
    return kExitOk;
  }
  if (!std::filesystem::exists(*path)) {
    std::cout << *path << ": no cache file\n";
    return kExitOk;
  }
  affsl2::CacheCounts counts = affsl2::cache_inspect(read_file(*path));
  std::cout << *path << ": " << counts.total() << " entries\n"
            << "  k-equivariant: " << counts.k_equivariant << "\n"
            << "  xi-equivariant: " << counts.xi_equivariant << "\n"
            << "  cohomology: " << counts.cohomology << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure constants of the affine Grassmannian of SL2"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--theory", o.theory, "k-equivariant, k-ordinary, xi-equivariant, xi-ordinary or cohomology");
    sub->add_option("--n", o.n, "index or inclusive range a..b");
    sub->add_option("--m", o.m, "index or inclusive range a..b");
    sub->add_option("--format", o.format, "plain, latex, csv or json");
  };

  CLI::App* table = app.add_subcommand("table", "print a table of structure constants");
  add_common(table);
  table->add_option("--kmax", o.kmax, "largest k printed");

  CLI::App* entry = app.add_subcommand("entry", "print a single structure constant");
  add_common(entry);
  entry->add_option("--k", o.k, "k index")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the cross-check suite");
  verify->add_option("level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  CLI::App* cache = app.add_subcommand("cache", "inspect or clear the cache file");
  cache->add_option("action", o.cache_action, "inspect or clear")->required()->check(CLI::IsMember({"inspect", "clear"}));

  for (CLI::App* sub : {table, entry, verify, cache})
    sub->add_option("--cache", o.cache, std::string("cache file (default: $") + affsl2::kCacheEnvVar + ")");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitBadRequest;
  }

  try {
    if (table->parsed()) return cmd_table(o);
    if (entry->parsed()) return cmd_entry(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_cache(o);
  } catch (affsl2::InternalError const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (affsl2::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadRequest;
  }
}
