#include "cosym/frame_file.hpp"

#include <algorithm>
#include <sstream>

namespace cosym {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Term {
  Rational coeff;
  std::vector<std::string> factors;  // basis names joined by '^' in the source
};

/// Terms are single tokens ("x1^x2", "2*x1^x2", "-1/2*x3", "-xi3") joined by
/// standalone "+" / "-" tokens.
std::vector<Term> parse_terms(const std::vector<std::string>& toks, size_t from, int line) {
  std::vector<Term> terms;
  int sign = 1;
  bool expect_term = true;
  for (size_t t = from; t < toks.size(); ++t) {
    const std::string& tok = toks[t];
    if (tok == "+" || tok == "-") {
      if (expect_term && !terms.empty()) parse_fail(line, "two consecutive operators");
      sign = (tok == "-") ? -1 : 1;
      expect_term = true;
      continue;
    }
    std::string body = tok;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      if (body[0] == '-') sign = -sign;
      body = body.substr(1);
    }
    Rational coeff = 1;
    auto star = body.find('*');
    if (star != std::string::npos) {
      try {
        coeff = parse_rational(body.substr(0, star));
      } catch (const std::exception& e) {
        parse_fail(line, std::string("bad rational coefficient: ") + e.what());
      }
      body = body.substr(star + 1);
    }
    if (body.empty() || (body[0] >= '0' && body[0] <= '9')) {
      parse_fail(line, "expected a basis name in term '" + tok + "'");
    }
    Term term{coeff * sign, {}};
    std::stringstream parts(body);
    std::string name;
    while (std::getline(parts, name, '^')) {
      if (name.empty()) parse_fail(line, "empty wedge factor in '" + tok + "'");
      term.factors.push_back(name);
    }
    terms.push_back(std::move(term));
    sign = 1;
    expect_term = false;
  }
  if (expect_term) parse_fail(line, "expected a term");
  return terms;
}

class Parser {
 public:
  FrameFile run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      auto toks = tokenize(raw);
      if (toks.empty()) continue;
      dispatch(toks, line);
    }
    finalize_frame(line);
    finalize_metric(line);
    validate_references(line);
    return std::move(out_);
  }

 private:
  void dispatch(const std::vector<std::string>& toks, int line) {
    const std::string& head = toks[0];
    if (head == "frame") return do_frame(toks, line);
    if (head == "basis") return do_basis(toks, line);
    if (head == "bracket") return do_bracket(toks, line);
    if (head == "ring") return do_ring(toks, line);
    if (head == "form") return do_form(toks, line);
    if (head == "vector") return do_vector(toks, line);
    if (head == "endo") return do_endo(toks, line);
    if (head == "metric") return do_metric(toks, line);
    if (head == "structure") return do_structure(toks, line);
    if (head == "acstructure") return do_acstructure(toks, line);
    parse_fail(line, "unknown directive '" + head + "'");
  }

  void do_frame(const std::vector<std::string>& toks, int line) {
    if (dim_ > 0) parse_fail(line, "duplicate frame directive");
    if (toks.size() != 2) parse_fail(line, "usage: frame <dim>");
    try {
      dim_ = std::stoi(toks[1]);
    } catch (const std::exception&) {
      parse_fail(line, "bad dimension '" + toks[1] + "'");
    }
    if (dim_ <= 0) parse_fail(line, "dimension must be positive");
    names_.clear();
    for (int i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
  }

  void require_frame(int line) {
    if (dim_ <= 0) parse_fail(line, "frame directive must come first");
  }

  void do_basis(const std::vector<std::string>& toks, int line) {
    require_frame(line);
    if (out_.frame) parse_fail(line, "basis must precede tensor directives");
    if (static_cast<int>(toks.size()) != dim_ + 1) {
      parse_fail(line, "basis needs exactly " + std::to_string(dim_) + " names");
    }
    names_.assign(toks.begin() + 1, toks.end());
    for (size_t i = 0; i < names_.size(); ++i) {
      for (size_t j = i + 1; j < names_.size(); ++j) {
        if (names_[i] == names_[j]) parse_fail(line, "duplicate basis name " + names_[i]);
      }
    }
  }

  int name_index(const std::string& name, int line) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) parse_fail(line, "unknown basis name '" + name + "'");
    return static_cast<int>(it - names_.begin());
  }

  void do_bracket(const std::vector<std::string>& toks, int line) {
    require_frame(line);
    if (out_.frame) parse_fail(line, "brackets must precede tensor directives");
    if (toks.size() < 5 || toks[3] != "=") parse_fail(line, "usage: bracket <a> <b> = <terms>");
    int i = name_index(toks[1], line);
    int j = name_index(toks[2], line);
    if (i == j) parse_fail(line, "bracket of a vector with itself");
    int sgn = 1;
    if (i > j) {
      std::swap(i, j);
      sgn = -1;
    }
    for (const Term& t : parse_terms(toks, 4, line)) {
      if (t.factors.size() != 1) parse_fail(line, "bracket terms must be single basis vectors");
      brackets_[{i, j}][name_index(t.factors[0], line)] += t.coeff * sgn;
    }
  }

  void finalize_frame(int line) {
    if (out_.frame) return;
    require_frame(line);
    BracketTable table;
    for (auto& [key, coeffs] : brackets_) {
      BracketCoeffs kept;
      for (auto& [k, c] : coeffs) {
        if (c != 0) kept[k] = c;
      }
      if (!kept.empty()) table[key] = std::move(kept);
    }
    try {
      out_.frame = std::make_shared<Frame>(names_, std::move(table));
    } catch (const Error& e) {
      fail(e.kind(), std::string("frame invalid: ") + e.what());
    }
  }

  void do_ring(const std::vector<std::string>& toks, int line) {
    if (toks.size() == 2 && toks[1] == "rational") {
      out_.ring = Ring::rational();
      return;
    }
    if (toks.size() == 3 && toks[1] == "lambda") {
      int p = 0;
      try {
        p = std::stoi(toks[2]);
      } catch (const std::exception&) {
        parse_fail(line, "bad lambda arity");
      }
      if (p < 1) parse_fail(line, "lambda ring needs p >= 1");
      out_.ring = Ring::lambda(p + 1);
      return;
    }
    parse_fail(line, "usage: ring rational | ring lambda <p>");
  }

  void do_form(const std::vector<std::string>& toks, int line) {
    finalize_frame(line);
    if (toks.size() < 5 || toks[3] != "=") parse_fail(line, "usage: form <name> <degree> = <terms>");
    int degree = 0;
    try {
      degree = std::stoi(toks[2]);
    } catch (const std::exception&) {
      parse_fail(line, "bad degree '" + toks[2] + "'");
    }
    if (degree < 1 || degree > dim_) parse_fail(line, "degree out of range");
    if (out_.forms.count(toks[1])) parse_fail(line, "duplicate form '" + toks[1] + "'");
    KForm form(out_.frame, degree, Ring::rational());
    for (const Term& t : parse_terms(toks, 4, line)) {
      if (static_cast<int>(t.factors.size()) != degree) {
        parse_fail(line, "term arity does not match the declared degree");
      }
      std::vector<int> key;
      for (const auto& n : t.factors) key.push_back(name_index(n, line));
      // sort the key, tracking the permutation sign
      int sgn = 1;
      for (size_t a = 0; a < key.size(); ++a) {
        for (size_t b = a + 1; b < key.size(); ++b) {
          if (key[a] == key[b]) parse_fail(line, "repeated factor in a wedge term");
          if (key[a] > key[b]) {
            std::swap(key[a], key[b]);
            sgn = -sgn;
          }
        }
      }
      form.add_coeff(key, Scalar(t.coeff * sgn));
    }
    out_.forms.emplace(toks[1], std::move(form));
  }

  void do_vector(const std::vector<std::string>& toks, int line) {
    finalize_frame(line);
    if (toks.size() < 4 || toks[2] != "=") parse_fail(line, "usage: vector <name> = <terms>");
    if (out_.vectors.count(toks[1])) parse_fail(line, "duplicate vector '" + toks[1] + "'");
    VectorField v(out_.frame, Ring::rational());
    for (const Term& t : parse_terms(toks, 3, line)) {
      if (t.factors.size() != 1) parse_fail(line, "vector terms must be single basis vectors");
      int i = name_index(t.factors[0], line);
      v.set(i, v[i] + Scalar(t.coeff));
    }
    out_.vectors.emplace(toks[1], std::move(v));
  }

  void do_endo(const std::vector<std::string>& toks, int line) {
    finalize_frame(line);
    if (toks.size() < 5 || toks[3] != "=") {
      parse_fail(line, "usage: endo <name> <basis> = <terms>");
    }
    auto [it, inserted] =
        out_.endos.try_emplace(toks[1], out_.frame, Ring::rational());
    int col = name_index(toks[2], line);
    for (const Term& t : parse_terms(toks, 4, line)) {
      if (t.factors.size() != 1) parse_fail(line, "endo terms must be single basis vectors");
      int row = name_index(t.factors[0], line);
      it->second.set(row, col, it->second.at(row, col) + Scalar(t.coeff));
    }
  }

  void do_metric(const std::vector<std::string>& toks, int line) {
    finalize_frame(line);
    if (toks.size() == 2 && toks[1] == "identity") {
      metric_identity_ = true;
      return;
    }
    if (toks.size() == 5 && toks[3] == "=") {
      int i = name_index(toks[1], line);
      int j = name_index(toks[2], line);
      Rational q;
      try {
        q = parse_rational(toks[4]);
      } catch (const std::exception& e) {
        parse_fail(line, std::string("bad metric entry: ") + e.what());
      }
      if (metric_entries_.empty()) {
        metric_entries_.assign(dim_, Column(dim_, Scalar::zero(Ring::rational())));
      }
      metric_entries_[i][j] = Scalar(q);
      metric_entries_[j][i] = Scalar(q);
      return;
    }
    parse_fail(line, "usage: metric identity | metric <a> <b> = <rational>");
  }

  void finalize_metric(int line) {
    if (metric_identity_ && !metric_entries_.empty()) {
      parse_fail(line, "metric declared both as identity and by entries");
    }
    if (metric_identity_) {
      out_.metric = identity_metric(out_.frame);
    } else if (!metric_entries_.empty()) {
      out_.metric = make_metric(out_.frame, std::move(metric_entries_));
    }
  }

  void do_structure(const std::vector<std::string>& toks, int line) {
    finalize_frame(line);
    if (toks.size() != 3) parse_fail(line, "usage: structure <eta> <omega>");
    out_.structures.emplace_back(toks[1], toks[2]);
  }

  void do_acstructure(const std::vector<std::string>& toks, int line) {
    finalize_frame(line);
    if (toks.size() != 4) parse_fail(line, "usage: acstructure <phi> <xi> <eta>");
    out_.acstructures.push_back({toks[1], toks[2], toks[3]});
  }

  void validate_references(int line) {
    for (const auto& [eta, omega] : out_.structures) {
      if (!out_.forms.count(eta)) parse_fail(line, "structure references unknown form '" + eta + "'");
      if (!out_.forms.count(omega)) parse_fail(line, "structure references unknown form '" + omega + "'");
    }
    for (const auto& names : out_.acstructures) {
      if (!out_.endos.count(names[0])) parse_fail(line, "acstructure references unknown endo '" + names[0] + "'");
      if (!out_.vectors.count(names[1])) parse_fail(line, "acstructure references unknown vector '" + names[1] + "'");
      if (!out_.forms.count(names[2])) parse_fail(line, "acstructure references unknown form '" + names[2] + "'");
    }
  }

  FrameFile out_;
  int dim_ = -1;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets_;
  bool metric_identity_ = false;
  Matrix metric_entries_;
};

std::string rational_str(const Scalar& c) { return to_string(c.rational_value()); }

void emit_terms_key(std::ostream& os, bool& first, const Rational& coeff,
                    const std::string& mono) {
  Rational c = coeff;
  if (first) {
    first = false;
    if (c < 0) {
      os << "-";
      c = -c;
    }
  } else {
    os << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
  }
  if (c == 1) {
    os << mono;
  } else {
    os << to_string(c) << "*" << mono;
  }
}

}  // namespace

FrameFile parse_frame_file(const std::string& text) { return Parser().run(text); }

std::string serialize_frame_file(const FrameFile& f) {
  std::ostringstream os;
  const Frame& fr = *f.frame;
  os << "frame " << fr.dim() << "\n";
  os << "basis";
  for (const auto& n : fr.names()) os << " " << n;
  os << "\n";
  for (const auto& [key, coeffs] : fr.brackets()) {
    os << "bracket " << fr.name(key.first) << " " << fr.name(key.second) << " =";
    bool lead = true;
    for (const auto& [k, c] : coeffs) {
      os << " " << (lead ? (c < 0 ? "-" : "") : (c < 0 ? "- " : "+ "));
      Rational a = c < 0 ? Rational(-c) : c;
      if (a == 1) {
        os << fr.name(k);
      } else {
        os << to_string(a) << "*" << fr.name(k);
      }
      lead = false;
    }
    os << "\n";
  }
  if (!f.ring.is_rational()) {
    os << "ring lambda " << (f.ring.lambda_vars - 1) << "\n";
  }
  for (const auto& [name, form] : f.forms) {
    os << "form " << name << " " << form.degree() << " = ";
    bool first = true;
    for (const auto& [key, c] : form.coeffs()) {
      std::string mono;
      for (size_t i = 0; i < key.size(); ++i) {
        if (i) mono += "^";
        mono += fr.name(key[i]);
      }
      emit_terms_key(os, first, c.rational_value(), mono);
    }
    os << "\n";
  }
  for (const auto& [name, v] : f.vectors) {
    os << "vector " << name << " = ";
    bool first = true;
    for (int i = 0; i < v.dim(); ++i) {
      if (!v[i].is_zero()) emit_terms_key(os, first, v[i].rational_value(), fr.name(i));
    }
    os << "\n";
  }
  for (const auto& [name, p] : f.endos) {
    for (int col = 0; col < p.dim(); ++col) {
      bool any = false;
      for (int row = 0; row < p.dim(); ++row) {
        if (!p.at(row, col).is_zero()) any = true;
      }
      if (!any) continue;
      os << "endo " << name << " " << fr.name(col) << " = ";
      bool first = true;
      for (int row = 0; row < p.dim(); ++row) {
        if (!p.at(row, col).is_zero()) {
          emit_terms_key(os, first, p.at(row, col).rational_value(), fr.name(row));
        }
      }
      os << "\n";
    }
  }
  if (f.metric) {
    bool is_identity = true;
    for (int i = 0; i < fr.dim() && is_identity; ++i) {
      for (int j = 0; j < fr.dim() && is_identity; ++j) {
        Scalar want = (i == j) ? Scalar(1) : Scalar(Rational(0));
        if (f.metric->g[i][j] != want) is_identity = false;
      }
    }
    if (is_identity) {
      os << "metric identity\n";
    } else {
      for (int i = 0; i < fr.dim(); ++i) {
        for (int j = i; j < fr.dim(); ++j) {
          if (!f.metric->g[i][j].is_zero()) {
            os << "metric " << fr.name(i) << " " << fr.name(j) << " = "
               << rational_str(f.metric->g[i][j]) << "\n";
          }
        }
      }
    }
  }
  for (const auto& [eta, omega] : f.structures) {
    os << "structure " << eta << " " << omega << "\n";
  }
  for (const auto& names : f.acstructures) {
    os << "acstructure " << names[0] << " " << names[1] << " " << names[2] << "\n";
  }
  return os.str();
}

}  // namespace cosym
