#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "lcegeom/io.hpp"

using namespace lcegeom;

namespace {

const char* kExample = R"({
  "format_version": 1,
  "q": 5,
  "n": 4,
  "k": 2,
  "G1": [1,0,1,1,0,1,1,2],
  "G2": [1,0,1,2,0,1,3,2],
  "secret": {"D":[1,3,4,2],"P":[3,1,4,2]},
  "seed": 0,
  "convention": "Q=D*P"
}
)";

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorKind::IoError;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(Io, ExampleParsesAndReserializesByteExact) {
  const auto inst = parse_instance(kExample);
  EXPECT_EQ(inst.n, 4);
  EXPECT_EQ(inst.secret->P, Permutation({3, 1, 4, 2}));
  EXPECT_EQ(serialize_instance(inst), kExample);
}

TEST(Io, InstanceRoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::uint64_t qs[] = {2, 3, 5, 7, 101};
    const int n = 3 + static_cast<int>(seed % 4);
    const int k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
    const auto inst = gen_instance(qs[seed % 5], n, k, seed);
    const auto text = serialize_instance(inst);
    const auto back = parse_instance(text);
    EXPECT_EQ(back.G1, inst.G1);
    EXPECT_EQ(back.G2, inst.G2);
    EXPECT_EQ(back.secret->D, inst.secret->D);
    EXPECT_EQ(back.secret->P, inst.secret->P);
    EXPECT_EQ(back.seed, inst.seed);
    EXPECT_EQ(serialize_instance(back), text);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(text.find('\r'), std::string::npos);
  }
}

TEST(Io, ModelRoundTrip) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    const std::uint64_t qs[] = {5, 7, 11, 13};
    const int n = 4 + static_cast<int>(seed % 2);
    const auto inst = gen_instance(qs[seed % 4], n, 2, seed);
    ModelOptions opts{1 + seed % 3, seed % 2 == 0, false, seed % 5 == 0};
    std::optional<ModelSystem> sys;
    try {
      sys = build_model(inst, opts);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::NoUsableInvariant);
      continue;
    }
    const auto digest = instance_digest(inst);
    const auto text = serialize_model(*sys, digest);
    const auto back = parse_model(text, inst);
    EXPECT_EQ(serialize_model(back, digest), text);
    ASSERT_EQ(back.equations.size(), sys->equations.size());
    for (std::size_t i = 0; i < back.equations.size(); ++i) {
      EXPECT_EQ(back.equations[i].tag, sys->equations[i].tag);
      EXPECT_EQ(back.equations[i].invariant, sys->equations[i].invariant);
      EXPECT_EQ(back.equations[i].body.index(), sys->equations[i].body.index());
      if (const auto* p = std::get_if<SparsePoly>(&sys->equations[i].body)) {
        EXPECT_EQ(std::get<SparsePoly>(back.equations[i].body), *p);
      }
    }
    for (std::size_t i = 0; i < back.invariants_used.size(); ++i) {
      EXPECT_EQ(back.invariants_used[i].pair, sys->invariants_used[i].pair);
      EXPECT_EQ(back.invariants_used[i].exponents, sys->invariants_used[i].exponents);
    }
    ++checked;
  }
}

TEST(Io, DigestDependsOnlyOnPublicData) {
  auto inst = parse_instance(kExample);
  const auto d = instance_digest(inst);
  EXPECT_EQ(d.size(), 64u);
  auto no_secret = inst;
  no_secret.secret.reset();
  no_secret.seed = 99;
  EXPECT_EQ(instance_digest(no_secret), d);
  auto other = inst;
  other.G2(1, 3) = 3;
  EXPECT_NE(instance_digest(other), d);
  EXPECT_EQ(instance_digest(gen_instance(7, 5, 2, 3)), instance_digest(gen_instance(7, 5, 2, 3)));
}

TEST(Io, RejectsMalformedInstances) {
  const std::string ex = kExample;
  EXPECT_EQ(parse_error_kind("{"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(ex, "\"q\": 5,", "")), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(ex, "\"q\": 5", "\"q\": 6")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "[1,0,1,1,0,1,1,2]", "[1,0,1,1,0,1,1,7]")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "[1,0,1,1,0,1,1,2]", "[1,0,1,1,0,1,1]")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "[1,0,1,1,0,1,1,2]", "[1,2,1,1,0,1,1,2]")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "\"P\":[3,1,4,2]", "\"P\":[1,2,3,4]")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "\"P\":[3,1,4,2]", "\"P\":[3,3,4,2]")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "Q=D*P", "Q=P*D")), ErrorKind::ValidationFailed);
  EXPECT_EQ(parse_error_kind(replace(ex, "\"format_version\": 1", "\"format_version\": 2")), ErrorKind::ParseError);
}

TEST(Io, ModelBoundToItsInstance) {
  const auto inst = parse_instance(kExample);
  const auto text = serialize_model(build_model(inst, ModelOptions{}), instance_digest(inst));
  auto other = gen_instance(5, 4, 2, 1);
  EXPECT_THROW(parse_model(text, other), Error);
  EXPECT_THROW(parse_model("[]", inst), Error);
}

TEST(Io, FileErrors) {
  try {
    read_text_file("/nonexistent/dir/file.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
  EXPECT_THROW(write_text_file("/nonexistent/dir/file.json", "x"), Error);
  const auto path = (std::filesystem::temp_directory_path() / "lcegeom_io_test.json").string();
  write_text_file(path, kExample);
  EXPECT_EQ(read_text_file(path), kExample);
  std::remove(path.c_str());
}
