// tlog: command-line workbench for finitely presented models of T_log

#include "tlog/axioms.hpp"
#include "tlog/extensions.hpp"
#include "tlog/lang.hpp"
#include "tlog/shifts.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using json = nlohmann::json;
using namespace tlog;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// named models, elements and shifts, persisted as JSON
class Workspace {
public:
  explicit Workspace(std::string path) : path_(std::move(path)) {
    data_ = {{"models", json::object()}, {"elements", json::object()}, {"shifts", json::object()}};
    if (!std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    try {
      json j = json::parse(in);
      for (const char* k : {"models", "elements", "shifts"})
        if (j.contains(k)) data_[k] = j[k];
    } catch (const json::exception& e) {
      throw UsageError("cannot read workspace " + path_ + ": " + e.what());
    }
  }

  void save() const {
    if (!dirty_) return;
    std::ofstream out(path_);
    out << data_.dump(2) << "\n";
    if (!out) throw UsageError("cannot write workspace " + path_);
  }

  bool has_model(const std::string& n) const { return data_["models"].contains(n); }

  // workspace name, or prime, prime:D, copies:N, copies:N:D
  Model model(const std::string& spec) const {
    if (has_model(spec)) {
      const json& j = data_["models"][spec];
      return {PsiOrder(j["copies"].get<std::vector<int>>()), j["radicand"].get<long>()};
    }
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
    auto num = [&](size_t i) {
      try {
        size_t used = 0;
        long v = std::stol(parts.at(i), &used);
        if (used != parts[i].size() || v < 0) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        throw UsageError("bad model '" + spec + "'");
      }
    };
    auto radicand = [&](size_t i) {
      long d = parts.size() > i ? num(i) : 0;
      if (d != 0 && !valid_radicand(d)) throw UsageError("radicand must be a positive non-square");
      return d;
    };
    if (!parts.empty() && parts[0] == "prime" && parts.size() <= 2) return Model::prime(radicand(1));
    if (!parts.empty() && parts[0] == "copies" && parts.size() >= 2 && parts.size() <= 3)
      return Model::with_copies(static_cast<int>(num(1)), radicand(2));
    throw UsageError("unknown model '" + spec + "'");
  }

  void put_model(const std::string& n, const Model& m) {
    data_["models"][n] = {{"copies", m.order.copies()}, {"radicand", m.radicand}};
    dirty_ = true;
  }

  std::map<std::string, Element> elements(const std::string& model_spec) const {
    std::map<std::string, Element> out;
    for (const auto& [name, j] : data_["elements"].items())
      if (j["model"] == model_spec) out[name] = parse_element(j["value"].get<std::string>());
    return out;
  }

  void put_element(const std::string& n, const std::string& model_spec, const Element& x) {
    data_["elements"][n] = {{"model", model_spec}, {"value", format_element(x)}};
    dirty_ = true;
  }

  std::unique_ptr<ShiftedCouple> shift(const std::string& n) const {
    if (!data_["shifts"].contains(n)) throw UsageError("unknown shift '" + n + "'");
    const json& j = data_["shifts"][n];
    std::optional<SCut> cut;
    if (!j["cut"].is_null()) cut = SCut{j["cut"].get<int>()};
    return std::make_unique<ShiftedCouple>(model(j["model"].get<std::string>()), cut,
                                           parse_element(j["eps"].get<std::string>()));
  }
  std::string shift_model(const std::string& n) const {
    if (!data_["shifts"].contains(n)) throw UsageError("unknown shift '" + n + "'");
    return data_["shifts"][n]["model"].get<std::string>();
  }

  void put_shift(const std::string& n, const std::string& model_spec, const std::optional<SCut>& cut, const Element& eps) {
    data_["shifts"][n] = {{"model", model_spec}, {"cut", cut ? json(cut->j) : json(nullptr)}, {"eps", format_element(eps)}};
    dirty_ = true;
  }

  const json& data() const { return data_; }

private:
  std::string path_;
  json data_;
  bool dirty_ = false;
};

bool is_formula(const std::string& text) { return text.find_first_of("<=") != std::string::npos; }

// element output in the e-basis unless --basis w
bool unit_basis = false;
std::string show(const Element& x) { return unit_basis ? format_element(x) : format_element_e(x); }

std::string eval_text(const std::string& text, const Environment& env, bool machine) {
  if (is_formula(text)) {
    bool v = eval_formula(*parse_formula(text), env);
    return machine ? std::string("value=") + (v ? "true" : "false") : (v ? "true" : "false");
  }
  std::string v = show(eval_term(*parse_term(text), env));
  return machine ? "value=" + v : v;
}

// columns of the Psi diagram: omega ladder, then each copy as a flat run
std::string render_psi(const Model& m, const std::string& title, bool machine) {
  if (machine) {
    std::ostringstream os;
    os << "block=omega\n";
    for (int c : m.order.copies()) os << "block=" << copy_name(c) << "\n";
    os << "sup=dashed\n";
    return os.str();
  }
  struct Col {
    char glyph;
    int height;
    std::string label, block;
  };
  std::vector<Col> cols;
  const int ladder = 5;
  for (int n = 0; n < ladder; ++n) cols.push_back({'|', n + 1, "w" + std::to_string(n), n == 0 ? "omega" : ""});
  cols.push_back({'.', 1, "", ""});
  for (int c : m.order.copies()) {
    cols.push_back({'.', 1, "", copy_name(c)});
    for (int k = -2; k <= 2; ++k) cols.push_back({'|', 3, std::to_string(k), ""});
    cols.push_back({'.', 1, "", ""});
  }
  cols.push_back({':', ladder, "", "sup Psi"});
  std::vector<size_t> width;
  for (const auto& c : cols) width.push_back(std::max<size_t>(3, c.label.size() + 1));
  std::ostringstream os;
  os << title << "\n";
  std::string names;
  size_t at = 0;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (!cols[i].block.empty()) {
      if (names.size() < at) names.append(at - names.size(), ' ');
      else if (!names.empty()) names += ' ';
      names += cols[i].block;
    }
    at += width[i];
  }
  os << names << "\n";
  for (int row = ladder; row >= 1; --row) {
    std::string line;
    for (size_t i = 0; i < cols.size(); ++i) {
      char ch = cols[i].height >= row ? cols[i].glyph : ' ';
      if (cols[i].glyph == '.' && row != 1) ch = ' ';
      line += ch;
      line.append(width[i] - 1, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  std::string labels;
  for (size_t i = 0; i < cols.size(); ++i) {
    std::string l = cols[i].label;
    labels += l;
    labels.append(width[i] - l.size(), ' ');
  }
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  os << labels << "\n";
  return os.str();
}

std::string report_text(const Report& r, bool machine) { return machine ? r.machine() : r.plain(); }

std::vector<SCut> parse_cuts(const std::string& text) {
  std::vector<SCut> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      size_t used = 0;
      int j = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      out.push_back({j});
    } catch (const std::exception&) {
      throw UsageError("bad cut list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty cut list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finitely presented models of T_log"};
  app.require_subcommand(1);
  std::string ws_path = "tlog-workspace.json", format = "plain";
  app.add_option("--workspace", ws_path, "workspace file")->capture_default_str();
  std::string basis = "e";
  app.add_option("--basis", basis, "element output for eval, let and repl: e or w (unit vectors)")
      ->check(CLI::IsMember({"e", "w"}))
      ->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "machine"}))->capture_default_str();

  std::string model_spec = "prime:2", sub_text, alpha_text, name, text, shift_name, cut_text, eps_text, as_name;
  std::string suite;
  long samples = 1000, window = 3, copies = 0, radicand = 0, count = 0, shifts = 50, sweep = 1000;
  std::string pseudolimit;
  std::uint64_t seed = 1;
  bool force = false, collision = false;

  auto* model = app.add_subcommand("model", "create, extend and show models");
  model->require_subcommand(1);
  auto* m_new = model->add_subcommand("new", "a model with the given number of copies");
  m_new->add_option("name", name)->required();
  m_new->add_option("--copies", copies)->check(CLI::NonNegativeNumber);
  m_new->add_option("--radicand", radicand, "0 for Q, else d for Q(sqrt d)");
  m_new->add_flag("--force", force, "overwrite an existing model");
  auto* m_extend = model->add_subcommand("extend", "insert new copies at s-cuts");
  m_extend->add_option("name", name)->required();
  m_extend->add_option("--cuts", cut_text, "nondecreasing cut indices, e.g. 0,1,1")->required();
  m_extend->add_option("--as", as_name, "store the extension under a new name");
  auto* m_show = model->add_subcommand("show", "describe a model");
  m_show->add_option("name", name)->required();
  model->add_subcommand("list", "list workspace models");

  auto add_model = [&](CLI::App* c) { c->add_option("--model", model_spec, "workspace model or prime[:D], copies:N[:D]")->capture_default_str(); };
  auto add_random = [&](CLI::App* c) {
    c->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--seed", seed)->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "evaluate a term or formula");
  eval->add_option("text", text)->required();
  add_model(eval);
  eval->add_option("--shift", shift_name, "evaluate in a stored shift");
  auto* sign = app.add_subcommand("sign", "sign of a term");
  sign->add_option("text", text)->required();
  add_model(sign);
  sign->add_option("--shift", shift_name);
  auto* let = app.add_subcommand("let", "store a named element");
  let->add_option("name", name)->required();
  let->add_option("text", text)->required();
  add_model(let);

  auto* trace = app.add_subcommand("trace", "trace set of alpha over a submodel");
  add_model(trace);
  trace->add_option("--sub", sub_text, "omega+c0+..., /Q for rational coefficients (default omega)");
  trace->add_option("--alpha", alpha_text)->required();
  trace->add_option("--window", window)->check(CLI::NonNegativeNumber)->capture_default_str();
  auto* classify = app.add_subcommand("classify", "simple-extension classifier");
  add_model(classify);
  classify->add_option("--sub", sub_text, "default omega, or the base copies for the interleaved pseudolimit");
  auto* alpha_opt = classify->add_option("--alpha", alpha_text);
  classify->add_option("--pseudolimit", pseudolimit, "classify a built-in pseudolimit instead of --alpha")
      ->check(CLI::IsMember({"harmonic", "interleaved"}))
      ->excludes(alpha_opt);
  classify->add_option("--count", count, "approximations (harmonic) or copies (interleaved)");
  auto* primitive = app.add_subcommand("primitive", "copies touched by alpha over a submodel");
  add_model(primitive);
  primitive->add_option("--sub", sub_text, "default omega");
  primitive->add_option("--alpha", alpha_text)->required();

  auto* shift = app.add_subcommand("shift", "define and check a (B, eps)-shift");
  shift->add_option("name", name)->required();
  add_model(shift);
  shift->add_option("--cut", cut_text, "index j of the s-cut B, or psi for B = Psi")->required();
  shift->add_option("--eps", eps_text)->required();
  add_random(shift);
  auto* pre = app.add_subcommand("precontraction", "precontraction-group axioms of chi");
  add_model(pre);
  pre->add_option("--shift", shift_name);
  pre->add_flag("--collision", collision, "two couples with the same chi but different psi");
  add_random(pre);
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"axioms", "shifts", "trace", "lang", "precontraction", "collision", "pc"}));
  add_random(check);
  check->add_option("--radicand", radicand)->capture_default_str();
  check->add_option("--shifts", shifts, "number of random shifts")->capture_default_str();
  check->add_option("--sweep", sweep, "(q, gamma) points per trace triple")->capture_default_str();
  auto* repl = app.add_subcommand("repl", "read-eval-print loop");
  add_model(repl);
  repl->add_option("--shift", shift_name);
  auto* render = app.add_subcommand("render", "ASCII diagrams");
  render->require_subcommand(1);
  auto* r_psi = render->add_subcommand("psi", "the Psi-set as sticks");
  add_model(r_psi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool machine = format == "machine";
  unit_basis = basis == "w";
  bool interleaved_base = pseudolimit == "interleaved" && sub_text.empty();
  if (sub_text.empty()) sub_text = "omega";
  std::ostream& out = std::cout;
  try {
    Workspace ws(ws_path);
    auto env_for = [&](std::unique_ptr<Couple>& holder) {
      std::string spec = model_spec;
      if (!shift_name.empty()) {
        holder = ws.shift(shift_name);
        spec = ws.shift_model(shift_name);
      } else {
        holder = std::make_unique<BaseCouple>(ws.model(model_spec));
      }
      Environment env{holder.get(), ws.elements(spec)};
      return env;
    };
    auto element = [&](const Model& m, const std::string& t) {
      BaseCouple c(m);
      Environment env{&c, ws.elements(model_spec)};
      Element x = eval_term(*parse_term(t), env);
      if (x.is_inf()) throw DomainError("expected a group element, got inf");
      m.check(x);
      return x;
    };
    int status = 0;

    if (model->parsed()) {
      if (m_new->parsed()) {
        if (ws.has_model(name) && !force) throw UsageError("model '" + name + "' exists; use --force");
        if (radicand != 0 && !valid_radicand(radicand)) throw UsageError("radicand must be a positive non-square");
        Model m = Model::with_copies(static_cast<int>(copies), radicand);
        ws.put_model(name, m);
        out << (machine ? "model=" : "created ") << name << "\n";
      } else if (m_extend->parsed()) {
        Model m = ws.model(name);
        InsertResult ins = insert_copies(m.order, parse_cuts(cut_text));
        std::string target = as_name.empty() ? name : as_name;
        ws.put_model(target, {ins.order, m.radicand});
        for (size_t i = 0; i < ins.new_ids.size(); ++i)
          out << (machine ? "new=" : "new ") << copy_name(ins.new_ids[i]) << (machine ? ";" : " at B") << ins.cuts[i].j
              << "\n";
        out << (machine ? "model=" : "stored as ") << target << "\n";
      } else if (m_show->parsed()) {
        Model m = ws.model(name);
        std::string cs;
        for (int c : m.order.copies()) cs += (cs.empty() ? "" : " ") + copy_name(c);
        if (machine) {
          out << "copies=" << cs << "\nradicand=" << m.radicand << "\n";
          for (const auto& [n, x] : ws.elements(name)) out << "element=" << n << ";" << format_element(x) << "\n";
        } else {
          out << name << ": omega" << (cs.empty() ? "" : " then " + cs) << ", coefficients in "
              << (m.radicand ? "Q(sqrt(" + std::to_string(m.radicand) + "))" : std::string("Q")) << "\n";
          for (const auto& [n, x] : ws.elements(name)) out << "  " << n << " = " << format_element(x) << "\n";
        }
      } else {
        for (const auto& [n, j] : ws.data()["models"].items()) out << (machine ? "model=" : "") << n << "\n";
      }
    } else if (eval->parsed()) {
      std::unique_ptr<Couple> c;
      Environment env = env_for(c);
      out << eval_text(text, env, machine) << "\n";
    } else if (sign->parsed()) {
      std::unique_ptr<Couple> c;
      Environment env = env_for(c);
      Element x = eval_term(*parse_term(text), env);
      if (x.is_inf()) throw DomainError("sign of infinity");
      int s = c->sign(x);
      out << (machine ? "sign=" : "") << s << "\n";
    } else if (let->parsed()) {
      Model m = ws.model(model_spec);
      Element x = element(m, text);
      ws.put_element(name, model_spec, x);
      out << (machine ? "value=" : name + " = ") << show(x) << "\n";
    } else if (trace->parsed()) {
      Model m = ws.model(model_spec);
      SubmodelSpec s = parse_submodel(sub_text);
      TraceResult t = trace_set(m, s, element(m, alpha_text), window);
      out << (machine ? trace_machine(m, s, t) : format_trace(m, s, t));
    } else if (classify->parsed()) {
      SubmodelSpec s = parse_submodel(sub_text);
      Model m;
      ExtensionReport rep;
      if (!pseudolimit.empty()) {
        PseudolimitSpec spec;
        if (pseudolimit == "harmonic") {
          spec = harmonic_sequence(count > 0 ? count : 64);
        } else {
          InterleavedCopies ex = interleaved_copies(count > 0 ? static_cast<int>(count) : 10);
          spec = ex.spec;
          if (interleaved_base) s = SubmodelSpec{ex.base.order.copies(), false};
        }
        m = spec.ambient;
        rep = classify_simple_extension(adjoin_pseudolimit(spec), s);
      } else {
        if (alpha_text.empty()) throw UsageError("classify needs --alpha or --pseudolimit");
        m = ws.model(model_spec);
        rep = classify_simple_extension(m, s, element(m, alpha_text));
      }
      if (machine) {
        for (size_t i = 0; i < rep.adjoined.size(); ++i)
          out << "adjoined=" << copy_name(rep.adjoined[i]) << ";" << rep.cuts[i].j << "\n";
        out << "terminal=" << to_string(rep.terminal) << "\nhorizon=" << (rep.horizon ? 1 : 0)
            << "\nfinal=" << format_submodel(rep.final_sub) << "\n";
      } else {
        out << format_report(m, s, rep);
      }
    } else if (primitive->parsed()) {
      Model m = ws.model(model_spec);
      std::vector<int> found = primitive_strip(m, parse_submodel(sub_text), element(m, alpha_text));
      std::string list;
      for (int c : found) list += (list.empty() ? "" : machine ? "," : " ") + copy_name(c);
      out << (machine ? "copies=" : "copies: ") << list << "\n";
    } else if (shift->parsed()) {
      Model m = ws.model(model_spec);
      std::optional<SCut> cut;
      if (cut_text != "psi") cut = parse_cuts(cut_text).at(0);
      Element eps = element(m, eps_text);
      ShiftedCouple sc(m, cut, eps);
      Report r = shift_check(sc, samples, seed);
      ws.put_shift(name, model_spec, cut, eps);
      out << report_text(r, machine);
      status = r.ok() ? 0 : 1;
    } else if (pre->parsed()) {
      Report r;
      if (collision) {
        r = chi_collision_demo(samples, seed);
      } else {
        std::unique_ptr<Couple> c;
        env_for(c);
        r = precontraction_check(*c, samples, seed);
      }
      out << report_text(r, machine);
      status = r.ok() ? 0 : 1;
    } else if (check->parsed()) {
      Report r;
      if (suite == "axioms") {
        r = axiom_check_models(samples, seed, radicand);
      } else if (suite == "shifts") {
        r.title = "random shifts";
        r.seed = seed;
        r.samples = samples;
        Sampler rng(seed);
        for (long i = 0; i < shifts; ++i) {
          Model m = Model::with_copies(static_cast<int>(rng.uniform(1, 4)));
          ShiftedCouple sc = random_shift(m, rng);
          r.merge(shift_check(sc, samples, rng.next()), "shift " + std::to_string(i) + ": ");
          r.notes.push_back("shift " + std::to_string(i) + " = " + sc.describe() + " over " +
                            std::to_string(m.order.size()) + " copies");
        }
      } else if (suite == "trace") {
        r = trace_check(samples, sweep, seed);
      } else if (suite == "lang") {
        r = lang_check(samples, seed);
      } else if (suite == "precontraction") {
        r = precontraction_check(BaseCouple(Model::with_copies(3, radicand)), samples, seed);
      } else if (suite == "collision") {
        r = chi_collision_demo(samples, seed);
      } else {
        r = pc_check(harmonic_sequence(), std::min(samples, 21L));
        r.merge(pc_check(interleaved_copies().spec, std::min(samples, 9L)), "interleaved: ");
      }
      out << report_text(r, machine);
      status = r.ok() ? 0 : 1;
    } else if (repl->parsed()) {
      std::unique_ptr<Couple> c;
      Environment env = env_for(c);
      bool tty = isatty(STDIN_FILENO);
      std::string line;
      for (;;) {
        if (tty) out << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line == "quit" || line == "exit") break;
        try {
          if (line.rfind("let ", 0) == 0) {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw UsageError("usage: let NAME = TERM");
            std::string n = line.substr(4, eq - 4);
            n.erase(n.find_last_not_of(" \t") + 1);
            n.erase(0, n.find_first_not_of(" \t"));
            Element x = eval_term(*parse_term(line.substr(eq + 1)), env);
            env.vars[n] = x;
            out << n << " = " << show(x) << "\n";
          } else if (line.rfind("sign ", 0) == 0) {
            Element x = eval_term(*parse_term(line.substr(5)), env);
            if (x.is_inf()) throw DomainError("sign of infinity");
            out << c->sign(x) << "\n";
          } else {
            out << eval_text(line, env, machine) << "\n";
          }
        } catch (const std::exception& e) {
          std::cerr << "error: " << e.what() << "\n";
        }
      }
    } else if (render->parsed()) {
      Model m = ws.model(model_spec);
      out << render_psi(m, "Psi of " + model_spec, machine);
    }
    ws.save();
    return status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
