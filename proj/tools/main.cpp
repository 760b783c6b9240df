#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "peaklab/checks.hpp"
#include "peaklab/idempotents.hpp"
#include "peaklab/param_series.hpp"
#include "peaklab/subspace.hpp"

namespace {

using namespace peaklab;

int cmd_list_checks() {
  for (const auto& spec : list_checks())
    std::cout << spec.id << "  n=" << spec.n_min << ".." << spec.n_max
              << " (hard cap " << spec.cap_min << ".." << spec.cap_max
              << ")\n    " << spec.description << "\n";
  return 0;
}

int cmd_verify(bool all, const std::string& check_id, int n_min, int n_max,
               const std::string& out_path, const std::string& format) {
  std::vector<ReportRecord> records;
  std::optional<int> lo =
      n_min >= 0 ? std::optional<int>(n_min) : std::nullopt;
  std::optional<int> hi =
      n_max >= 0 ? std::optional<int>(n_max) : std::nullopt;
  if (all) {
    records = run_all_checks();
  } else if (!check_id.empty()) {
    records = run_check(check_id, lo, hi);
  } else {
    std::cerr << "verify: pass --all or --check <id>\n";
    return 2;
  }
  if (out_path.empty()) {
    std::cout << (format == "json" ? report_to_json(records)
                                   : report_to_text(records));
  } else {
    emit_report(records, out_path, format);
    std::cout << report_to_text(records);
  }
  return any_failure(records) ? 1 : 0;
}

int cmd_basis(const std::string& spec_name, int n, bool fixed,
              const std::string& flat_orbit, const std::string& bidegree) {
  if (fixed || !bidegree.empty()) {
    std::vector<Monomial> basis;
    if (!bidegree.empty()) {
      auto comma = bidegree.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--bidegree expects k,l");
      basis = fixed_basis_component(n, std::stoi(bidegree.substr(0, comma)),
                                    std::stoi(bidegree.substr(comma + 1)));
    } else {
      basis = fixed_basis(n);
    }
    for (const auto& m : basis) std::cout << m.to_string() << "\n";
    return 0;
  }
  RingSpec spec = RingSpec::parse(spec_name, n);
  std::vector<Monomial> basis =
      flat_orbit.empty()
          ? standard_basis(spec)
          : flat_orbit_component(spec, flat_orbit == "0"
                                           ? Partition()
                                           : Partition::parse(flat_orbit));
  for (const auto& m : basis) std::cout << m.to_string() << "\n";
  return 0;
}

int cmd_hilb(const std::string& spec_name, int n, bool bigraded) {
  RingSpec spec = RingSpec::parse(spec_name, n);
  if (bigraded) {
    BivarPoly poly;
    for (const auto& [key, c] : bigraded_hilbert_series(spec))
      poly[key] = Rat(c);
    std::cout << bivar_to_string(poly) << "\n";
    return 0;
  }
  auto coeffs = hilbert_series(spec);
  std::ostringstream out;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    if (d) out << " + ";
    out << coeffs[d].get_str();
    if (d) out << "*t^" << d;
  }
  std::cout << out.str() << "\n";
  return 0;
}

std::vector<GroupAlgebraElement> family_elements(const std::string& family,
                                                 int n) {
  if (family == "eulerian-a") return eulerian_A(n).elements;
  if (family == "eulerian-b") return eulerian_B(n).elements;
  if (family == "peak") return peak_idempotents(n).elements;
  throw std::invalid_argument("unknown family: " + family);
}

int cmd_idem(const std::string& family, int n, int k, bool grouped,
             const std::string& conjecture_file) {
  if (!conjecture_file.empty()) {
    std::ifstream in(conjecture_file);
    if (!in) throw std::runtime_error("cannot read " + conjecture_file);
    nlohmann::json j = nlohmann::json::parse(in);
    std::map<Partition, GroupAlgebraElement> supplied;
    for (const auto& [key, value] : j.items())
      supplied.emplace(Partition::parse(key),
                       GroupAlgebraElement::from_json_string(value.dump()));
    auto mismatch = check_peak_sum_against_family(n, supplied);
    if (mismatch) {
      std::cout << "mismatch: " << *mismatch << "\n";
      return 1;
    }
    std::cout << "all odd-count sums match the peak family\n";
    return 0;
  }
  auto elements = family_elements(family, n);
  auto dump_one = [&](size_t idx) {
    const auto& e = elements[idx];
    if (!grouped) {
      std::cout << e.to_json_string() << "\n";
      return;
    }
    StatisticGrouping g = family == "peak" ? group_by_peak_set(e)
                                           : group_by_descent_set(e);
    nlohmann::ordered_json by_stat = nlohmann::ordered_json::object();
    for (const auto& [key, c] : g.coefficient_by_statistic) {
      std::string name = "{";
      for (size_t i = 0; i < key.size(); ++i)
        name += (i ? "," : "") + std::to_string(key[i]);
      name += "}";
      by_stat[name] = rat_to_string(c);
    }
    nlohmann::ordered_json out;
    out["k"] = idx;
    out["constant"] = g.constant;
    out["coefficients"] = std::move(by_stat);
    std::cout << out.dump() << "\n";
  };
  if (k >= 0) {
    if (k >= static_cast<int>(elements.size()))
      throw std::invalid_argument("k out of range for the family");
    dump_one(static_cast<size_t>(k));
  } else {
    for (size_t idx = 0; idx < elements.size(); ++idx) dump_one(idx);
  }
  return 0;
}

int cmd_char(const std::string& family, int n, int k) {
  auto elements = family_elements(family, n);
  if (k < 0 || k >= static_cast<int>(elements.size()))
    throw std::invalid_argument("k out of range for the family");
  if (elements[k].group().kind == GroupKind::HyperoctahedralB) {
    std::cout << "dim = " << rat_to_string(left_ideal_dimension(elements[k]))
              << "\n";
    return 0;
  }
  ClassFunction chi = left_ideal_character(elements[k]);
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  auto parts = partitions_of(n);
  for (size_t i = 0; i < parts.size(); ++i)
    values[parts[i].to_string()] = rat_to_string(chi.values()[i]);
  nlohmann::ordered_json out;
  out["n"] = n;
  out["chi"] = std::move(values);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_pairing(int n, const std::string& monomial, bool inverse_gamma) {
  Monomial m = Monomial::parse(monomial);
  if (inverse_gamma) {
    std::cout << gamma_map(m).to_string() << "\n";
    return 0;
  }
  std::cout << pairing_phi(m, n).to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peaklab: exact verification of peak/Eulerian idempotent and "
               "configuration-space ring identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run registered checks");
  bool all = false;
  std::string check_id, out_path, format = "text";
  int n_min = -1, n_max = -1;
  verify->add_flag("--all", all, "run every check over its default range");
  verify->add_option("--check", check_id, "single check id");
  verify->add_option("--n-min", n_min, "lower end of the n range");
  verify->add_option("--n-max", n_max, "upper end of the n range");
  verify->add_option("--out", out_path, "report output path");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* list = app.add_subcommand("list-checks", "print the check registry");

  auto* basis = app.add_subcommand("basis", "print a monomial basis");
  std::string spec_name = "b-vw", flat_orbit, bidegree;
  int n = 3;
  bool fixed = false;
  basis->add_option("--spec", spec_name, "a-t | b-u | b-vw | b-vw-gr");
  basis->add_option("--n", n, "rank")->required();
  basis->add_flag("--fixed", fixed, "print the sign-fixed basis");
  basis->add_option("--flat-orbit", flat_orbit,
                    "restrict to one flat orbit, e.g. 2,1 (use 0 for the "
                    "empty orbit)");
  basis->add_option("--bidegree", bidegree,
                    "restrict the fixed basis to bidegree k,l");

  auto* hilb = app.add_subcommand("hilb", "print a Hilbert series");
  std::string hilb_spec = "b-vw";
  int hilb_n = 3;
  bool bigraded = false;
  hilb->add_option("--spec", hilb_spec, "a-t | b-u | b-vw | b-vw-gr");
  hilb->add_option("--n", hilb_n, "rank")->required();
  hilb->add_flag("--bigraded", bigraded, "census by (degree, edge degree)");

  auto* idem = app.add_subcommand("idem", "dump idempotent families");
  std::string family = "peak", conjecture_file;
  int idem_n = 3, idem_k = -1;
  bool grouped = false;
  idem->add_option("--family", family, "eulerian-a | eulerian-b | peak");
  idem->add_option("--n", idem_n, "rank")->required();
  idem->add_option("--k", idem_k, "single member index");
  idem->add_flag("--grouped", grouped,
                 "group coefficients by the descent/peak statistic");
  idem->add_option("--conjecture-family", conjecture_file,
                   "JSON file {partition: group-algebra element} with a "
                   "claimed primitive type-A family; tests the odd-count "
                   "sums against the peak family");

  auto* chr = app.add_subcommand("char", "left-ideal character of a member");
  std::string chr_family = "peak";
  int chr_n = 3, chr_k = 0;
  chr->add_option("--family", chr_family, "eulerian-a | eulerian-b | peak");
  chr->add_option("--n", chr_n, "rank")->required();
  chr->add_option("--k", chr_k, "member index")->required();

  auto* pairing = app.add_subcommand("pairing", "apply the pairing map");
  int pairing_n = 4;
  std::string pairing_monomial;
  bool inverse_gamma = false;
  pairing->add_option("--n", pairing_n, "rank")->required();
  pairing->add_option("--monomial", pairing_monomial, "e.g. t12*t23")
      ->required();
  pairing->add_flag("--gamma", inverse_gamma,
                    "apply gamma (vw -> t substitution) instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list_checks();
    if (verify->parsed())
      return cmd_verify(all, check_id, n_min, n_max, out_path, format);
    if (basis->parsed())
      return cmd_basis(spec_name, n, fixed, flat_orbit, bidegree);
    if (hilb->parsed()) return cmd_hilb(hilb_spec, hilb_n, bigraded);
    if (idem->parsed())
      return cmd_idem(family, idem_n, idem_k, grouped, conjecture_file);
    if (chr->parsed()) return cmd_char(chr_family, chr_n, chr_k);
    if (pairing->parsed())
      return cmd_pairing(pairing_n, pairing_monomial, inverse_gamma);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
