#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cosetlab/app.hpp"
#include "cosetlab/cache.hpp"
#include "cosetlab/catalog.hpp"
#include "cosetlab/error.hpp"
#include "cosetlab/report.hpp"
#include "cosetlab/spec_io.hpp"
#include "test_support.hpp"

using namespace cosetlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("cosetlab_io_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(SpecIo, RoundTripsEveryKind) {
  const std::vector<GroupSpec> specs = {
      GroupSpec::named("S4"),
      GroupSpec::cayley({{0, 1}, {1, 0}}),
      GroupSpec::perm(3, {{1, 2, 0}}),
      GroupSpec::product({GroupSpec::named("C2"), GroupSpec::perm(3, {{1, 0, 2}})}),
  };
  for (const auto& s : specs) {
    const auto j = group_spec_to_json(s);
    EXPECT_EQ(j["format"], "groupspec-v1");
    const auto back = group_spec_from_json(j);
    EXPECT_EQ(canonical_dump(group_spec_to_json(back)), canonical_dump(j));
    EXPECT_EQ(load_group(back)->order(), load_group(s)->order());
  }
}

TEST(SpecIo, CanonicalDumpSortsKeys) {
  const auto a = json::parse(R"({"b":1,"a":{"d":2,"c":3}})");
  EXPECT_EQ(canonical_dump(a), R"({"a":{"c":3,"d":2},"b":1})");
}

TEST(SpecIo, Rejections) {
  const char* bad[] = {
      R"({"kind":"named","name":"S4"})",
      R"({"format":"groupspec-v2","kind":"named","name":"S4"})",
      R"({"format":"groupspec-v1","kind":"blob"})",
      R"({"format":"groupspec-v1","kind":"named","name":"S4","extra":1})",
      R"({"format":"groupspec-v1","kind":"cayley","order":2,"table":[[0,-1],[1,0]]})",
      R"({"format":"groupspec-v1","kind":"perm","degree":0,"generators":[]})",
      R"({"format":"groupspec-v1","kind":"product","factors":[{"kind":"named","name":"C2"}]})",
      R"([1,2])",
  };
  for (const auto* text : bad) {
    EXPECT_EQ(code_of([&] { group_spec_from_json(json::parse(text)); }), ErrorCode::InvalidSpec)
        << text;
  }
}

TEST(SpecIo, Files) {
  TempDir d;
  write(d.path() / "ok.json", R"({"format":"groupspec-v1","kind":"named","name":"D4"})");
  write(d.path() / "broken.json", R"({"format":"groupspec-v1",)");
  EXPECT_EQ(load_group(read_group_spec_file(d.path() / "ok.json"))->order(), 8U);
  EXPECT_EQ(code_of([&] { read_group_spec_file(d.path() / "broken.json"); }), ErrorCode::InvalidSpec);
  EXPECT_EQ(code_of([&] { read_group_spec_file(d.path() / "absent.json"); }), ErrorCode::IoError);
}

TEST(Cache, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cache, KeyDependsOnCanonicalSpec) {
  const auto a = group_spec_from_json(json::parse(R"({"name":"S4","kind":"named","format":"groupspec-v1"})"));
  EXPECT_EQ(lattice_cache_key(a), lattice_cache_key(GroupSpec::named("S4")));
  EXPECT_NE(lattice_cache_key(a), lattice_cache_key(GroupSpec::named("A4")));
}

TEST(Cache, MissThenHitThenCorrupt) {
  TempDir d;
  const auto spec = GroupSpec::named("S4");
  const auto g = load_group(spec);
  std::ostringstream warn;
  const auto cold = cached_lattice(d.path(), spec, g, {}, warn);
  EXPECT_EQ(cold.status, CacheStatus::Miss);
  const auto warm = cached_lattice(d.path(), spec, g, {}, warn);
  EXPECT_EQ(warm.status, CacheStatus::Hit);
  EXPECT_EQ(warm.subgroups, cold.subgroups);
  EXPECT_TRUE(warn.str().empty());

  const auto file = d.path() / (lattice_cache_key(spec) + ".json");
  ASSERT_TRUE(fs::exists(file));
  write(file, "{ not json");
  const auto repaired = cached_lattice(d.path(), spec, g, {}, warn);
  EXPECT_EQ(repaired.status, CacheStatus::Corrupt);
  EXPECT_EQ(repaired.subgroups, cold.subgroups);
  EXPECT_NE(warn.str().find("warning"), std::string::npos);
  EXPECT_EQ(cached_lattice(d.path(), spec, g, {}, warn).status, CacheStatus::Hit);
}

TEST(Cache, TamperedChecksumDetected) {
  TempDir d;
  const auto spec = GroupSpec::named("D4");
  const auto g = load_group(spec);
  store_lattice(d.path(), spec, *g, enumerate_subgroups(g));
  const auto file = d.path() / (lattice_cache_key(spec) + ".json");
  json doc;
  std::ifstream(file) >> doc;
  doc["lattice"]["subgroups"][1] = json::array({0, 1});
  write(file, doc.dump());
  EXPECT_EQ(code_of([&] { load_lattice(d.path(), spec, g); }), ErrorCode::CacheCorrupt);
  EXPECT_FALSE(load_lattice(d.path() / "nowhere", spec, g).has_value());
}

TEST(Cache, DisabledWithEmptyDir) {
  const auto spec = GroupSpec::named("C6");
  std::ostringstream warn;
  EXPECT_EQ(cached_lattice({}, spec, load_group(spec), {}, warn).status, CacheStatus::Disabled);
}

TEST(App, ParseKRange) {
  EXPECT_EQ(parse_k_range("3..4"), (std::pair{3, 4}));
  EXPECT_EQ(parse_k_range("5"), (std::pair{5, 5}));
  for (const auto* bad : {"", "x", "3..", "..3", "3..4x"}) {
    EXPECT_THROW(parse_k_range(bad), Error) << bad;
  }
  for (const auto* out_of_range : {"4..3", "1..4", "2..7"}) {
    const auto [lo, hi] = parse_k_range(out_of_range);
    RunConfig cfg{.command = "verify", .group = "C2", .k_min = lo, .k_max = hi};
    EXPECT_THROW(validate(cfg), Error) << out_of_range;
  }
}

TEST(App, VerifyReportIsSchemaValidAndDeterministic) {
  TempDir d;
  RunConfig cfg{.command = "verify", .group = "D6", .k_min = 2, .k_max = 5};
  cfg.cache_dir = d.path();
  std::ostringstream warn;
  const auto cold = run_command(cfg, warn);
  EXPECT_EQ(cold.exit_code, kExitOk);
  EXPECT_TRUE(validate_report(cold.report).empty());
  EXPECT_EQ(cold.report["runtime"]["cache_status"], "miss");
  cfg.jobs = 3;
  const auto warm = run_command(cfg, warn);
  EXPECT_EQ(warm.report["runtime"]["cache_status"], "hit");
  EXPECT_EQ(without_runtime(cold.report).dump(), without_runtime(warm.report).dump());
  const auto& ver = cold.report["verification"];
  ASSERT_EQ(ver.size(), 4U);
  EXPECT_EQ(ver[3]["status"], "conjecture-open");
  EXPECT_EQ(ver[0]["status"], "theorem");
}

TEST(App, OtherCommandsProduceValidReports) {
  std::ostringstream warn;
  for (const auto* cmd : {"lemmas", "census", "subgroups"}) {
    RunConfig cfg{.command = cmd, .group = "S3"};
    cfg.cache_dir.clear();
    cfg.samples = 50;
    const auto r = run_command(cfg, warn);
    EXPECT_EQ(r.exit_code, kExitOk) << cmd;
    const auto errors = validate_report(r.report);
    EXPECT_TRUE(errors.empty()) << cmd << ": " << (errors.empty() ? "" : errors.front());
  }
}

TEST(App, CensusSingleTriple) {
  RunConfig cfg{.command = "census", .group = "C2xC2"};
  cfg.cache_dir.clear();
  cfg.triple = std::array<std::size_t, 3>{1, 2, 3};
  std::ostringstream warn;
  const auto r = run_command(cfg, warn);
  ASSERT_EQ(r.report["census"].size(), 1U);
  EXPECT_EQ(r.report["census"][0]["closed_form"]["meet_all"], 4);
  cfg.triple = std::array<std::size_t, 3>{1, 2, 9};
  EXPECT_THROW(run_command(cfg, warn), Error);
}

TEST(App, ValidateReportCatchesStrayKeys) {
  RunConfig cfg{.command = "subgroups", .group = "C4"};
  cfg.cache_dir.clear();
  std::ostringstream warn;
  auto doc = run_command(cfg, warn).report;
  EXPECT_TRUE(validate_report(doc).empty());
  doc["surprise"] = 1;
  EXPECT_FALSE(validate_report(doc).empty());
  doc.erase("surprise");
  doc.erase("format");
  EXPECT_FALSE(validate_report(doc).empty());
}

TEST(App, ConfigErrors) {
  std::ostringstream warn;
  RunConfig cfg{.command = "verify", .group = "Z9"};
  cfg.cache_dir.clear();
  EXPECT_EQ(code_of([&] { run_command(cfg, warn); }), ErrorCode::UnknownFamily);
  cfg.group = "S4";
  cfg.jobs = 0;
  EXPECT_EQ(code_of([&] { validate(cfg); }), ErrorCode::InvalidArgument);
  cfg.jobs = 1;
  cfg.max_order = 10;
  EXPECT_EQ(code_of([&] { run_command(cfg, warn); }), ErrorCode::OrderCapExceeded);
}

TEST(App, ResolveGroupSpec) {
  EXPECT_EQ(resolve_group_spec("S4").kind, GroupSpec::Kind::Named);
  EXPECT_EQ(resolve_group_spec("C2xS3").kind, GroupSpec::Kind::Product);
  EXPECT_EQ(code_of([&] { resolve_group_spec("/no/such/file.json"); }), ErrorCode::IoError);
}

TEST(App, CatalogListing) {
  std::ostringstream out, warn;
  RunConfig cfg{.command = "catalog"};
  cfg.cache_dir.clear();
  print_catalog(cfg, out, warn);
  const auto text = out.str();
  EXPECT_NE(text.find("S4, order 24, 30 subgroups\n"), std::string::npos);
  EXPECT_NE(text.find("C6, order 6, 4 subgroups\n"), std::string::npos);
  EXPECT_NE(text.find("Q8, order 8, 6 subgroups\n"), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            catalog_names().size());
}
