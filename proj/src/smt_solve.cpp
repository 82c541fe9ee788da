#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cplusmt/smt.hpp"

namespace cplusmt {

namespace {

// ---------------------------------------------------------------------------
// S-expression reader for solver output
// ---------------------------------------------------------------------------

struct Sexpr {
  bool isAtom = false;
  std::string atom;
  std::vector<Sexpr> items;
};

struct SexprReader {
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool atEnd() {
    skip();
    return pos >= text.size();
  }

  Sexpr next() {
    skip();
    if (pos >= text.size()) throw SolveError("unexpected end of solver output");
    char c = text[pos];
    Sexpr e;
    if (c == '(') {
      ++pos;
      for (;;) {
        skip();
        if (pos >= text.size()) throw SolveError("unbalanced '(' in solver output");
        if (text[pos] == ')') {
          ++pos;
          return e;
        }
        e.items.push_back(next());
      }
    }
    e.isAtom = true;
    if (c == '|') {
      std::size_t end = text.find('|', pos + 1);
      if (end == std::string::npos) throw SolveError("unterminated quoted symbol");
      e.atom = text.substr(pos + 1, end - pos - 1);
      pos = end + 1;
      return e;
    }
    if (c == '"') {
      std::size_t end = text.find('"', pos + 1);
      if (end == std::string::npos) throw SolveError("unterminated string");
      e.atom = text.substr(pos, end - pos + 1);
      pos = end + 1;
      return e;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    e.atom = text.substr(start, pos - start);
    return e;
  }
};

struct ParsedValue {
  Rational num;
  bool boolean = false;
  bool isBool = false;
  bool exact = true;
};

ParsedValue parseNumeric(const Sexpr& e) {
  ParsedValue out;
  if (e.isAtom) {
    std::string s = e.atom;
    if (s == "true" || s == "false") {
      out.isBool = true;
      out.boolean = s == "true";
      return out;
    }
    if (!s.empty() && s.back() == '?') {
      // Decimal approximation of an algebraic real (z3's pp.decimal mode).
      out.exact = false;
      s.pop_back();
    }
    out.num = parseRational(s);
    return out;
  }
  if (e.items.empty()) throw SolveError("empty value expression in model");
  const std::string& head = e.items[0].atom;
  if (head == "-" && e.items.size() == 2) {
    out = parseNumeric(e.items[1]);
    out.num = -out.num;
    return out;
  }
  if (head == "/" && e.items.size() == 3) {
    ParsedValue a = parseNumeric(e.items[1]);
    ParsedValue b = parseNumeric(e.items[2]);
    if (b.num == 0) throw SolveError("model value divides by zero");
    out.num = a.num / b.num;
    out.exact = a.exact && b.exact;
    return out;
  }
  if ((head == "to_real" || head == "to_int") && e.items.size() == 2)
    return parseNumeric(e.items[1]);
  if (head == "root-obj")
    throw SolveError(
        "solver returned an irrational algebraic value (root-obj); such models "
        "are out of scope - configure the solver to print decimals");
  throw SolveError("cannot parse model value expression starting with '" + head + "'");
}

Value defaultValue(const Sort& s) {
  switch (s.kind()) {
    case SortKind::Boolean: return Value::ofBool(false);
    case SortKind::Enum: return Value::ofSym(s.symbols().front());
    case SortKind::IntRange: return Value::ofNum(Rational(s.lo()));
    default: return Value::ofNum(0);
  }
}

}  // namespace

SolverModel parseModel(const std::string& text, const Signature& sig, bool strict) {
  SolverModel model;
  model.rawText = text;
  SexprReader reader{text};
  std::vector<Sexpr> defines;
  while (!reader.atEnd()) {
    Sexpr e = reader.next();
    if (e.isAtom) continue;  // verdicts and solver chatter
    // Either (model (define-fun ...) ...) or a bare list of define-funs;
    // non-define entries (the 'model' atom, (error ...) lists) fall through.
    for (const Sexpr& item : e.items) {
      if (!item.isAtom && !item.items.empty() && item.items[0].isAtom &&
          item.items[0].atom == "define-fun")
        defines.push_back(item);
    }
  }
  for (const Sexpr& def : defines) {
    if (def.items.size() < 5) continue;
    const std::string& name = def.items[1].atom;
    int id = sig.find(name);
    if (id < 0) continue;  // solver-internal definitions
    const Sort& sort = sig.at(id).valueSort;
    ParsedValue pv = parseNumeric(def.items[4]);
    ModelValue mv;
    mv.exact = pv.exact;
    if (pv.isBool) {
      if (sort.kind() != SortKind::Boolean)
        throw SolveError("Boolean model value for non-Boolean '" + name + "'");
      mv.value = Value::ofBool(pv.boolean);
    } else if (sort.kind() == SortKind::Enum) {
      if (denominator(pv.num) != 1 || pv.num < 0 ||
          pv.num >= static_cast<long>(sort.symbols().size()))
        throw SolveError("enum index out of range for '" + name + "'");
      mv.value = Value::ofSym(
          sort.symbols()[pv.num.convert_to<std::size_t>()]);
    } else if (sort.kind() == SortKind::Boolean) {
      throw SolveError("numeric model value for Boolean '" + name + "'");
    } else {
      if (!sort.admits(Value::ofNum(pv.num)))
        throw SolveError("model value " + ratioString(pv.num) + " outside the sort of '" +
                         name + "'");
      mv.value = Value::ofNum(pv.num);
    }
    model.approximate |= !mv.exact;
    model.values[id] = std::move(mv);
  }
  if (strict && model.approximate)
    throw SolveError("solver returned approximate (inexact) values; strict mode rejects them");
  // Constants a solver considers don't-care may be missing; any value
  // satisfies the instance, so fill a canonical one.
  for (int id = 0; id < sig.size(); ++id)
    if (!model.values.count(id))
      model.values[id] = ModelValue{defaultValue(sig.at(id).valueSort), true, ""};
  return model;
}

SolveResult solve(const SmtInstance& inst, const std::string& solverCmd,
                  const SolveOptions& opts) {
  if (solverCmd.empty())
    throw SolveError("no solver command; pass --solver or set ASPMT_SOLVER");

  std::string path = opts.dumpPath;
  bool temporary = path.empty();
  if (temporary) {
    char tmpl[] = "/tmp/cplusmt-XXXXXX.smt2";
    int fd = mkstemps(tmpl, 5);
    if (fd < 0) throw SolveError("cannot create temporary instance file");
    close(fd);
    path = tmpl;
  }
  {
    std::ofstream out(path);
    if (!out) throw SolveError("cannot write instance file '" + path + "'");
    out << inst.text();
  }

  std::string cmd = solverCmd + " '" + path + "' 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    if (temporary) std::remove(path.c_str());
    throw SolveError("cannot run solver command '" + solverCmd + "'");
  }
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  if (temporary) std::remove(path.c_str());

  SolveResult res;
  res.solverOutput = output;
  std::istringstream lines(output);
  std::string line;
  std::optional<SolveStatus> verdict;
  while (std::getline(lines, line)) {
    // Trim; solvers print the verdict on a line of its own.
    auto b = line.find_first_not_of(" \t\r");
    auto e = line.find_last_not_of(" \t\r");
    std::string word = b == std::string::npos ? "" : line.substr(b, e - b + 1);
    if (word == "sat") verdict = SolveStatus::Sat;
    else if (word == "unsat") verdict = SolveStatus::Unsat;
    else if (word == "unknown") verdict = SolveStatus::Unknown;
    if (verdict) break;
  }
  if (!verdict) {
    std::ostringstream os;
    os << "solver produced no sat/unsat/unknown verdict (exit status " << status
       << "); output:\n" << output;
    throw SolveError(os.str());
  }
  res.status = *verdict;
  if (res.status == SolveStatus::Sat)
    res.model = parseModel(output, *inst.sig, opts.strictModels);
  return res;
}

}  // namespace cplusmt
