#include "boolecode/sbox.hpp"

#include <cctype>

namespace boolecode {

namespace {

constexpr Sbox kAes = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

std::string ratio_text(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1) s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

nlohmann::ordered_json threshold_json(const Threshold& t) {
  return {{"beta", t.beta}, {"feasible", t.feasible}};
}

}  // namespace

const Sbox& aes_sbox() noexcept { return kAes; }

Sbox sbox_from_hex(std::string_view hex) {
  require(hex.size() == 512, "S-box hex must have exactly 512 digits");
  Sbox s{};
  for (std::size_t i = 0; i < 256; ++i) {
    require(std::isxdigit(static_cast<unsigned char>(hex[2 * i])) && std::isxdigit(static_cast<unsigned char>(hex[2 * i + 1])),
            "S-box hex contains a non-hex character");
    s[i] = static_cast<std::uint8_t>(std::stoul(std::string(hex.substr(2 * i, 2)), nullptr, 16));
  }
  return s;
}

BooleanFunction sbox_bit(const Sbox& s, unsigned bit) {
  require(bit < 8, "S-box output bit must be in [0, 8)");
  std::vector<std::uint8_t> table(256);
  for (std::size_t x = 0; x < 256; ++x) table[x] = static_cast<std::uint8_t>((s[x] >> bit) & 1U);
  return BooleanFunction(8, std::move(table));
}

SboxCaseStudy sbox_casestudy(const Sbox& s, std::size_t n, std::size_t k) {
  SboxCaseStudy out;
  out.n = n;
  out.k = k;
  for (unsigned bit = 0; bit < 8; ++bit) {
    const auto f = sbox_bit(s, bit);
    const auto anf = anf_from_truth_table(f);
    SboxBitRow row;
    row.bit = bit;
    row.degree = anf.degree();
    row.sparsity = anf.sparsity();
    row.weight = f.weight();
    row.lcc = threshold_lcc(n, k, row.degree);
    row.anf = threshold_mds(n, k);
    row.dnf = threshold_mds(n, k);
    row.ptf = row.weight == 0 ? Threshold{0, false, -1} : threshold_ptf(n, k, row.weight);
    out.degree = std::max(out.degree, row.degree);
    out.bits.push_back(row);
  }
  out.degree_matches = out.degree == kSboxExpectedDegree;
  out.lcc = threshold_lcc(n, k, out.degree);
  out.anf = threshold_mds(n, k);
  out.dnf = threshold_mds(n, k);
  if (out.lcc.beta > 0) out.improvement = Rational(out.anf.beta - out.lcc.beta, out.lcc.beta);

  const std::size_t w = out.bits.front().weight;
  if (w > 0) {
    Threshold prev{};
    for (std::size_t d = 1; d <= w; ++d) {
      const auto t = threshold_dptf(n, k, w, d);
      if (d > 1 && t.beta < prev.beta) out.dptf_monotone = false;
      prev = t;
      if ((d & (d - 1)) == 0 || d == w) out.dptf.push_back({d, dptf_degree(w, d), t});
    }
  }
  return out;
}

nlohmann::ordered_json SboxCaseStudy::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["degree"] = degree;
  j["degree_matches_expected"] = degree_matches;
  if (!degree_matches) j["warning"] = "fixture degree is " + std::to_string(degree) + ", expected 7";
  j["beta_lcc"] = lcc.beta;
  j["beta_anf"] = anf.beta;
  j["beta_dnf"] = dnf.beta;
  j["improvement_ratio"] = ratio_text(improvement);
  j["improvement_percent"] = ratio_text(improvement * 100);
  auto& rows = j["bits"] = nlohmann::ordered_json::array();
  for (const auto& b : bits) {
    rows.push_back({{"bit", b.bit},
                    {"degree", b.degree},
                    {"sparsity", b.sparsity},
                    {"weight", b.weight},
                    {"lcc", threshold_json(b.lcc)},
                    {"anf", threshold_json(b.anf)},
                    {"dnf", threshold_json(b.dnf)},
                    {"ptf", threshold_json(b.ptf)}});
  }
  auto& d = j["dptf"] = nlohmann::ordered_json::array();
  for (const auto& r : dptf) d.push_back({{"d", r.d}, {"degree", r.degree}, {"beta", r.beta.beta}, {"feasible", r.beta.feasible}});
  j["dptf_monotone"] = dptf_monotone;
  return j;
}

}  // namespace boolecode
