#include "cellalg/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "cellalg/errors.hpp"
#include "cellalg/parse.hpp"

namespace cellalg {

namespace {

// Text assembled from one or more source lines, with a map back to
// (line, column) for error reporting.
class Source {
 public:
  void append(std::string_view text, std::size_t line, std::size_t column) {
    if (!segments_.empty()) {
      text_ += '\n';
      segments_.push_back({text_.size(), line, column});
    } else {
      segments_.push_back({0, line, column});
    }
    text_ += text;
  }

  const std::string& text() const { return text_; }

  std::pair<std::size_t, std::size_t> locate(std::size_t offset) const {
    const Segment* seg = &segments_.front();
    for (const auto& s : segments_) {
      if (s.offset <= offset) seg = &s;
    }
    return {seg->line, seg->column + (offset - seg->offset)};
  }

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    const auto [line, col] = locate(offset);
    throw ParseError(what, line, col);
  }

 private:
  struct Segment {
    std::size_t offset;
    std::size_t line;
    std::size_t column;
  };
  std::string text_;
  std::vector<Segment> segments_;
};

std::size_t skip_ws(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Item {
  std::string text;
  std::size_t offset;  // of the first non-blank character
};

// Splits on `sep`; offsets refer to `s` shifted by `base`.
std::vector<Item> split(std::string_view s, char sep, std::size_t base) {
  std::vector<Item> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      const std::size_t b = skip_ws(s, start);
      out.push_back({trim(s.substr(start, i - start)), base + std::min(b, i)});
      start = i + 1;
    }
  }
  return out;
}

Polynomial parse_at(const Source& src, const Item& item, const RingPtr& ring) {
  if (item.text.empty()) src.fail("expected a polynomial", item.offset);
  try {
    return parse_polynomial(item.text, ring);
  } catch (const ParseError& e) {
    src.fail(e.message(), item.offset + e.column() - 1);
  }
}

struct LayerDraft {
  std::size_t line = 0;
  std::optional<std::vector<std::string>> vars;
  RingPtr ring;
  std::optional<std::vector<Polynomial>> ideal;
  std::optional<std::size_t> vdim;
  std::optional<std::vector<std::vector<Polynomial>>> phi;
  std::size_t phi_line = 0;
  std::optional<std::vector<std::pair<std::size_t, Polynomial>>> sigma;
};

std::vector<std::vector<Polynomial>> parse_phi(const Source& src, std::size_t start, const RingPtr& ring) {
  const std::string& s = src.text();
  std::size_t pos = skip_ws(s, start);
  auto expect = [&](char c) {
    pos = skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c) src.fail(std::string("expected '") + c + "'", std::min(pos, s.size() - 1));
    ++pos;
  };
  expect('[');
  std::vector<std::vector<Polynomial>> rows;
  for (;;) {
    expect('[');
    const std::size_t close = s.find(']', pos);
    if (close == std::string::npos) src.fail("unterminated phi row", pos);
    std::vector<Polynomial> row;
    for (const auto& item : split(std::string_view(s).substr(pos, close - pos), ',', pos)) {
      row.push_back(parse_at(src, item, ring));
    }
    rows.push_back(std::move(row));
    pos = skip_ws(s, close + 1);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  pos = skip_ws(s, pos);
  if (pos != s.size()) src.fail("unexpected text after phi", pos);
  return rows;
}

int bracket_balance(std::string_view s) {
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

CellLayerPtr finish_layer(LayerDraft& d, std::size_t end_line) {
  auto missing = [&](const char* what) {
    throw ParseError(std::string("layer starting on line ") + std::to_string(d.line) + " has no '" + what + "'",
                     end_line, 1);
  };
  if (!d.vars) missing("vars");
  if (!d.ideal) missing("ideal");
  if (!d.vdim) missing("vdim");
  if (!d.phi) missing("phi");
  const auto& rows = *d.phi;
  if (rows.size() != *d.vdim) {
    throw ParseError("phi has " + std::to_string(rows.size()) + " rows but vdim is " + std::to_string(*d.vdim),
                     d.phi_line, 1);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != *d.vdim) {
      throw ParseError("phi row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                           " entries but vdim is " + std::to_string(*d.vdim),
                       d.phi_line, 1);
    }
  }
  auto qr = make_quotient_ring(IdealPresentation(d.ring, *d.ideal));
  std::optional<std::vector<Polynomial>> sigma;
  if (d.sigma) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < d.ring->nvars(); ++i) images.push_back(Polynomial::variable(d.ring, i));
    for (const auto& [var, img] : *d.sigma) images[var] = img;
    sigma = std::move(images);
  }
  return std::make_shared<const CellLayer>(CellLayer::make(qr, rows, sigma));
}

}  // namespace

CellularAlgebraSpec parse_spec(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(std::move(cur));
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    lines.push_back(std::move(cur));
  }

  std::optional<FieldSpec> field;
  CellularAlgebraSpec spec;
  std::optional<LayerDraft> layer;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    std::string_view line = lines[li];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t kw_start = skip_ws(line, 0);
    if (kw_start == line.size()) continue;
    std::size_t kw_end = kw_start;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    const std::string keyword(line.substr(kw_start, kw_end - kw_start));
    const std::size_t arg_start = skip_ws(line, kw_end);
    const std::string_view arg = line.substr(arg_start);
    Source src;
    src.append(arg, line_no, arg_start + 1);
    auto fail = [&](const std::string& what, std::size_t col = 0) -> void {
      throw ParseError(what, line_no, col == 0 ? kw_start + 1 : col);
    };

    if (keyword == "field") {
      if (field) fail("duplicate 'field' directive");
      if (layer) fail("'field' inside a layer");
      std::istringstream in{std::string(arg)};
      std::string kind;
      in >> kind;
      if (kind == "Q") {
        field = FieldSpec::rationals();
      } else if (kind == "Fp") {
        std::string p;
        in >> p;
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 19) {
          fail("expected a prime after 'Fp'", arg_start + 1);
        }
        try {
          field = FieldSpec::prime_field(std::stoull(p));
        } catch (const std::invalid_argument& e) {
          fail(e.what(), arg_start + 1);
        }
      } else {
        fail("unknown field '" + kind + "' (expected Q or Fp <prime>)", arg_start + 1);
      }
      std::string rest;
      if (in >> rest) fail("unexpected text after field", arg_start + 1);
      continue;
    }
    if (keyword == "layer") {
      if (!field) fail("'layer' before 'field'");
      if (layer) fail("'layer' inside a layer (missing 'end'?)");
      if (!arg.empty()) fail("unexpected text after 'layer'", arg_start + 1);
      layer = LayerDraft{};
      layer->line = line_no;
      continue;
    }
    if (keyword == "end") {
      if (!layer) fail("'end' without 'layer'");
      if (!arg.empty()) fail("unexpected text after 'end'", arg_start + 1);
      spec.layers.push_back(finish_layer(*layer, line_no));
      layer.reset();
      continue;
    }
    if (!layer) fail("'" + keyword + "' outside a layer block");

    auto require_vars = [&] {
      if (!layer->vars) fail("'" + keyword + "' before 'vars'");
    };
    auto once = [&](bool present) {
      if (present) fail("duplicate '" + keyword + "'");
    };

    if (keyword == "vars") {
      once(layer->vars.has_value());
      std::vector<std::string> names;
      if (trim(arg) != "-") {
        for (const auto& item : split(arg, ',', 0)) {
          if (!is_identifier(item.text)) fail("invalid variable name '" + item.text + "'", arg_start + item.offset + 1);
          for (const auto& n : names) {
            if (n == item.text) fail("duplicate variable '" + item.text + "'", arg_start + item.offset + 1);
          }
          names.push_back(item.text);
        }
      }
      layer->ring = make_ring(*field, names);
      layer->vars = std::move(names);
    } else if (keyword == "ideal") {
      require_vars();
      once(layer->ideal.has_value());
      std::vector<Polynomial> gens;
      if (trim(arg) != "-") {
        for (const auto& item : split(arg, ',', 0)) gens.push_back(parse_at(src, item, layer->ring));
      }
      layer->ideal = std::move(gens);
    } else if (keyword == "vdim") {
      once(layer->vdim.has_value());
      const std::string v = trim(arg);
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 4 || std::stoul(v) == 0) {
        fail("vdim must be a positive integer", arg_start + 1);
      }
      layer->vdim = std::stoul(v);
    } else if (keyword == "phi") {
      require_vars();
      once(layer->phi.has_value());
      layer->phi_line = line_no;
      int depth = bracket_balance(arg);
      while (depth > 0 && li + 1 < lines.size()) {
        ++li;
        std::string_view more = lines[li];
        if (auto hash = more.find('#'); hash != std::string_view::npos) more = more.substr(0, hash);
        src.append(more, li + 1, 1);
        depth += bracket_balance(more);
      }
      if (depth != 0) fail("unbalanced brackets in phi", arg_start + 1);
      layer->phi = parse_phi(src, 0, layer->ring);
    } else if (keyword == "sigma") {
      require_vars();
      once(layer->sigma.has_value());
      std::vector<std::pair<std::size_t, Polynomial>> images;
      for (const auto& item : split(arg, ',', 0)) {
        const auto arrow = item.text.find("->");
        if (arrow == std::string::npos) src.fail("expected '<var> -> <poly>'", item.offset);
        const std::string var = trim(std::string_view(item.text).substr(0, arrow));
        const auto idx = layer->ring->index_of(var);
        if (!idx) src.fail("unknown variable '" + var + "' in sigma", item.offset);
        for (const auto& [seen, img] : images) {
          if (seen == *idx) src.fail("variable '" + var + "' mapped twice", item.offset);
        }
        const std::string_view rhs = std::string_view(item.text).substr(arrow + 2);
        const std::size_t rhs_off = item.offset + arrow + 2 + skip_ws(rhs, 0);
        images.emplace_back(*idx, parse_at(src, Item{trim(rhs), rhs_off}, layer->ring));
      }
      layer->sigma = std::move(images);
    } else {
      fail("unknown directive '" + keyword + "'");
    }
  }
  if (layer) throw ParseError("layer starting on line " + std::to_string(layer->line) + " has no 'end'", lines.size(), 1);
  if (!field) throw ParseError("missing 'field' directive", 1, 1);
  if (spec.layers.empty()) throw ParseError("spec has no layers", lines.size(), 1);
  spec.field = *field;
  return spec;
}

CellularAlgebraSpec parse_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecIoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw SpecIoError("cannot read " + path.string());
  return parse_spec(buf.str());
}

std::string print_spec(const CellularAlgebraSpec& spec) {
  std::ostringstream out;
  out << "field " << spec.field.name() << "\n";
  for (const auto& lp : spec.layers) {
    const CellLayer& layer = *lp;
    const auto& ring = layer.ring->ring();
    out << "\nlayer\n  vars ";
    if (ring->nvars() == 0) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < ring->nvars(); ++i) out << (i ? ", " : "") << ring->variables()[i];
    }
    out << "\n  ideal ";
    const auto& gens = layer.ring->presentation().generators;
    if (gens.empty()) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : "") << gens[i].to_string();
    }
    out << "\n  vdim " << layer.vdim << "\n  phi " << layer.phi.to_string() << "\n";
    if (!layer.sigma_is_identity()) {
      out << "  sigma ";
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        out << (i ? ", " : "") << ring->variables()[i] << " -> " << layer.sigma[i].to_string();
      }
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

bool specs_identical(const CellularAlgebraSpec& a, const CellularAlgebraSpec& b) {
  if (!(a.field == b.field) || a.layers.size() != b.layers.size()) return false;
  for (std::size_t j = 0; j < a.layers.size(); ++j) {
    const CellLayer& x = *a.layers[j];
    const CellLayer& y = *b.layers[j];
    if (!(*x.ring->ring() == *y.ring->ring())) return false;
    if (x.ring->presentation().generators != y.ring->presentation().generators) return false;
    if (x.vdim != y.vdim || !(x.phi == y.phi) || x.sigma != y.sigma) return false;
  }
  return true;
}

}  // namespace cellalg
