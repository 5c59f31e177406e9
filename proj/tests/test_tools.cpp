#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "discarr/gallery.hpp"
#include "discarr_tools/commands.hpp"
#include "discarr_tools/io.hpp"

using namespace discarr;
using namespace discarr::tools;

namespace {

int run(std::vector<std::string> args, std::string* out = nullptr) {
  std::vector<const char*> argv{"discarr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(ArrangementJson, RoundTripsEveryGalleryItem) {
  for (const auto& name : gallery_names()) {
    const Arrangement a = gallery_item(name);
    const Arrangement b = parse_arrangement(arrangement_to_json(a).dump());
    EXPECT_EQ(b.field(), a.field()) << name;
    EXPECT_EQ(b.normals(), a.normals()) << name;
    EXPECT_EQ(digest(a), digest(b));
  }
  EXPECT_NE(digest(crapo()), digest(octahedral()));
}

TEST(ArrangementJson, FieldDescriptors) {
  EXPECT_EQ(field_from_json(json::parse(R"({"kind":"galois","p":2,"modulus":[1,1,1]})")),
            FieldDescriptor::galois(2, {1, 1, 1}));
  EXPECT_EQ(field_from_json(json::parse(R"({"kind":"cyclotomic","m":12})")), FieldDescriptor::cyclotomic(12));
  EXPECT_THROW(field_from_json(json::parse(R"({"kind":"real"})")), ParseError);
  EXPECT_THROW(field_from_json(json::parse(R"({"d":5})")), ParseError);
}

TEST(ArrangementJson, Errors) {
  EXPECT_THROW(parse_arrangement("{"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"field":{"kind":"rational"},"k":2,"normals":[["1"],["0","1"],["1","1"]]})"),
               ParseError);
  EXPECT_THROW(parse_arrangement(R"({"field":{"kind":"rational"},"k":2,"normals":[["1","0"],["0","1"]]})"), ParseError);
  EXPECT_THROW(parse_arrangement(R"({"field":{"kind":"rational"},"k":2,"normals":[["1","0"],["0","x"],["1","1"]]})"),
               ParseError);
  EXPECT_THROW(load_arrangement("/nonexistent/file.json"), Error);
}

TEST(Cli, DetectReportsPublishedCounts) {
  const CommandResult oct = cmd_detect("gallery:octahedral", 2);
  EXPECT_EQ(oct.exit_code, kExitOk);
  EXPECT_EQ(oct.report["results"]["m"], 12);
  EXPECT_EQ(oct.report["results"]["involutions"]["count"], 6);
  EXPECT_EQ(oct.report["schema_version"], 1);
  const CommandResult dd = cmd_detect("gallery:dodecahedral", 3);
  EXPECT_EQ(dd.report["results"]["m"], 10);
  EXPECT_EQ(dd.report["results"]["good6"]["ranks"], json::array({2}));
  const CommandResult poly = cmd_detect("gallery:polygon-7", std::nullopt);
  EXPECT_TRUE(poly.report["results"]["m_is_lower_bound"].get<bool>());
  EXPECT_EQ(poly.exit_code, kExitOk);
}

TEST(Cli, ReportsAreByteStable) {
  EXPECT_EQ(cmd_detect("gallery:f5", std::nullopt).report.dump(), cmd_detect("gallery:f5", std::nullopt).report.dump());
  EXPECT_EQ(cmd_table("classification", 0).report.dump(), cmd_table("classification", 0).report.dump());
}

TEST(Cli, ClassifyAndTables) {
  EXPECT_EQ(cmd_classify("gallery:f4").report["results"]["type"], "6^1");
  EXPECT_EQ(cmd_classify("gallery:f5").report["results"]["type"], "1^1 5^1");
  EXPECT_EQ(cmd_classify("gallery:witness-3^2").report["results"]["type"], "3^2");
  EXPECT_TRUE(cmd_classify("gallery:dodecahedral").report["results"]["type_determined_by_m"].get<bool>());
  for (const char* t : {"mformula", "classification", "dodecahedral"}) EXPECT_EQ(cmd_table(t, 0).exit_code, kExitOk) << t;
  EXPECT_THROW(cmd_table("other", 0), Error);
}

TEST(Cli, LatticeAgreesWithDetectors) {
  const CommandResult r = cmd_lattice("gallery:dodecahedral", std::nullopt, 0);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["results"]["nvg_count"], 10);
  EXPECT_TRUE(r.report["checks"]["detector_agreement"].get<bool>());
  for (const auto& f : r.report["results"]["nvg_flats"]) EXPECT_EQ(f["rank"], 2);
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run({"detect", "gallery:octahedral", "--k", "2"}, &out), kExitOk);
  EXPECT_NE(out.find("m(A)"), std::string::npos);
  EXPECT_EQ(run({"detect", "gallery:octahedral", "--k", "3"}), kExitParse);
  EXPECT_EQ(run({"detect", temp_file("bad.json", "{\"field\":")}), kExitParse);
  EXPECT_EQ(run({"detect", temp_file("ng.json", R"({"field":{"kind":"rational"},"k":2,"normals":[["1","0"],["2","0"],["1","1"]]})")}),
            kExitNotGeneric);
  EXPECT_EQ(run({"frobnicate"}), kExitParse);
  EXPECT_EQ(run({"classify", "gallery:polygon-7"}), kExitOther);
  EXPECT_EQ(exit_code_for(Error(ErrorCode::kClosureViolation, "x")), kExitClosure);
  EXPECT_EQ(run({"--quiet", "table", "mformula"}, &out), kExitOk);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(run({"table", "mformula", "--json"}, &out), kExitOk);
  EXPECT_EQ(json::parse(out)["results"]["rows"].size(), 11u);
}

TEST(Cli, ReferenceArrangementIsVeryGeneric) {
  std::string out;
  ASSERT_EQ(run({"reference", "--n", "6", "--k", "3", "--seed", "4"}, &out), kExitOk);
  const std::string path = temp_file("ref.json", out);
  ASSERT_EQ(run({"detect", path, "--k", "3", "--json"}, &out), kExitOk);
  EXPECT_EQ(json::parse(out)["results"]["m"], 0);
}

TEST(Cli, GalleryShowLoadsBack) {
  std::string out;
  ASSERT_EQ(run({"gallery", "show", "dodecahedral"}, &out), kExitOk);
  EXPECT_EQ(parse_arrangement(out).normals(), dodecahedral().normals());
  ASSERT_EQ(run({"gallery", "list", "--json"}, &out), kExitOk);
  EXPECT_EQ(json::parse(out)["results"]["items"].size(), gallery_names().size());
}
