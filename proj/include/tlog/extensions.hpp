#pragma once

#include "tlog/couple.hpp"
#include "tlog/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tlog {

// omega part plus whole copies of an ambient model, over Q or the full field
struct SubmodelSpec {
  std::vector<int> copies;
  bool rational_only = false;

  static SubmodelSpec prime(bool rational_only = false) { return {{}, rational_only}; }
  bool has_copy(int id) const;
  bool has(const PsiPosition& p) const { return p.is_omega() || has_copy(p.copy); }
  SubmodelSpec with(int copy, const PsiOrder& ambient) const;  // keeps ambient order
  friend bool operator==(const SubmodelSpec&, const SubmodelSpec&) = default;
};

bool field_is_rational(const Model& ambient, const SubmodelSpec& s);
// admissible coefficient for the submodel's field
bool in_field(const Model& ambient, const SubmodelSpec& s, const Scalar& c);
// the cancellable part of x: coefficients at submodel positions projected to the field
Element project(const Model& ambient, const SubmodelSpec& s, const Element& x);
bool submodel_contains(const Model& ambient, const SubmodelSpec& s, const Element& x);
// the submodel as a model in its own right
Model submodel_model(const Model& ambient, const SubmodelSpec& s);
std::string format_submodel(const SubmodelSpec& s);
SubmodelSpec parse_submodel(const std::string& text);  // "omega+c0+c2", "/Q" suffix for rationals only

// downward closed subset of Psi_S
struct PsiDownset {
  enum class Kind { upto, below_cut };
  Kind kind = Kind::upto;
  PsiPosition top{};  // upto: v <= top
  int cut = 0;        // below_cut: v outside the tail of submodel copies from index cut on
  bool contains(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& v) const;
};

struct TracePart {
  PsiDownset inside;
  std::optional<PsiPosition> external;
  bool contains(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& v) const;
};

// value == psi(q*alpha - gamma) (or s(...) when via_s)
struct TraceWitness {
  PsiPosition value;
  bool via_s = false;
  Scalar q;
  Element gamma;
};

enum class TraceCase { case1, case2, case3 };
std::string to_string(TraceCase c);

struct TraceResult {
  TraceCase kind = TraceCase::case1;
  TracePart psi_part, s_part;
  std::optional<PsiPosition> max_inside;  // case 1
  int cut = 0;                            // cases 2 and 3, index into the submodel copies
  std::optional<PsiPosition> external;    // case 3
  std::vector<TraceWitness> witnesses;
  bool horizon = false;
  std::string note;

  bool contains(const PsiOrder& ambient, const SubmodelSpec& s, const PsiPosition& v) const {
    return psi_part.contains(ambient, s, v) || s_part.contains(ambient, s, v);
  }
};

// submodel positions inside a finite window, in Psi order
std::vector<PsiPosition> sub_window(const Model& ambient, const SubmodelSpec& s, long window);

TraceResult trace_set(const Model& ambient, const SubmodelSpec& s, const Element& alpha, long window = 3);
std::string format_trace(const Model& ambient, const SubmodelSpec& s, const TraceResult& t);
std::string trace_machine(const Model& ambient, const SubmodelSpec& s, const TraceResult& t);

// random (ambient, submodel, alpha) triples: witnesses, a (q, gamma) sweep, and the structural constraints
Report trace_check(long triples, long sweep, std::uint64_t seed);

// pseudolimit lambda of alpha_0, alpha_1, ... with psi(lambda - alpha_N) = v_N
struct PseudolimitSpec {
  std::string name;
  Model ambient;
  std::function<Element(long)> alpha;
  std::function<PsiPosition(long)> increment;
  std::function<int(long)> sigma;  // sign of lambda - alpha_N
  long count = 0;                   // indices 0..count-1 are available
};

PseudolimitSpec harmonic_sequence(long count = 64);
// base with nine copies, ten new copies interleaved so each sits in its own s-cut
struct InterleavedCopies {
  Model base, ambient;
  std::vector<int> new_copies;
  PseudolimitSpec spec;
};
InterleavedCopies interleaved_copies(int copies = 10);

// q*lambda + y
struct ExtendedElement {
  Scalar q;
  Element y;
};

class PseudolimitExtension {
public:
  explicit PseudolimitExtension(PseudolimitSpec spec) : spec_(std::move(spec)) {}
  const PseudolimitSpec& spec() const { return spec_; }
  const Model& ambient() const { return spec_.ambient; }
  int sign(const ExtendedElement& z, long start = 0) const;
  Element psi(const ExtendedElement& z, long start = 0) const;
  Element succ(const ExtendedElement& z, long start = 0) const;

private:
  PseudolimitSpec spec_;
  long stable_index(const ExtendedElement& z, long start, bool for_s) const;
};

Report pc_check(const PseudolimitSpec& spec, long n);
// rejects a spec whose first indices are not pseudocauchy
PseudolimitExtension adjoin_pseudolimit(const PseudolimitSpec& spec, long check_prefix = 12);
TraceResult trace_set(const PseudolimitExtension& ext, const SubmodelSpec& s, long window = 3);

enum class Terminal { in_span, span_plus_q_alpha };
std::string to_string(Terminal t);

struct ExtensionReport {
  std::vector<int> adjoined;
  std::vector<SCut> cuts;  // relative to the starting submodel
  Terminal terminal = Terminal::in_span;
  SubmodelSpec final_sub;
  std::vector<TraceResult> steps;
  bool horizon = false;
};

ExtensionReport classify_simple_extension(const Model& ambient, const SubmodelSpec& s, const Element& alpha);
ExtensionReport classify_simple_extension(const PseudolimitExtension& ext, const SubmodelSpec& s);
std::string format_report(const Model& ambient, const SubmodelSpec& start, const ExtensionReport& r);

std::vector<int> primitive_strip(const Model& ambient, const SubmodelSpec& s, const Element& alpha);

// smallest submodel containing s and x, with the Q x flag when x stays outside its span
struct AclResult {
  SubmodelSpec sub;
  bool plus_q_x = false;
};
AclResult acl_generate(const Model& ambient, const SubmodelSpec& s, const Element& x);
// a in acl(S u {b})
bool in_acl(const Model& ambient, const SubmodelSpec& s, const Element& b, const Element& a);

// gamma + q*alpha with alpha > 0 realizing a cut in the classes of the base
class ClassCutExtension {
public:
  ClassCutExtension(Model base, CutDescriptor cut, Element psi_value);
  const Model& base() const { return base_; }
  const CutDescriptor& cut() const { return cut_; }
  const Element& psi_value() const { return beta_; }
  // psi-value side of the cut: true when unit(v) is a psi-value of the larger classes
  bool in_larger_classes(const PsiPosition& v) const;
  int sign(const ExtendedElement& z) const;
  Element psi(const ExtendedElement& z) const;
  // canonical form of the cut: the set of larger-class psi-values
  std::string cut_key() const;

private:
  Model base_;
  CutDescriptor cut_;
  Element beta_;
};

bool same_type_over(const ClassCutExtension& a, const ClassCutExtension& b);
// both elements must generate group-closed extensions of the submodel
bool same_type_over(const Model& ambient, const SubmodelSpec& s, const Element& a, const Element& b);
// a submodel element strictly between a and b, when one is found
std::optional<Element> cut_separator(const Model& ambient, const SubmodelSpec& s, const Element& a,
                                     const Element& b);

// extension of the identity on the old copies sending b[eta,k] to succ^k(image[eta])
class Embedding {
public:
  Embedding(PsiOrder source, const Model& target, std::map<int, PsiPosition> image)
      : source_(std::move(source)), target_(target), image_(std::move(image)) {}
  PsiPosition map(const PsiPosition& p) const;
  Element map(const Element& x) const;

private:
  PsiOrder source_;
  Model target_;
  std::map<int, PsiPosition> image_;
};

Embedding embed_universal(const PsiOrder& old_order, const InsertResult& source, const Model& target,
                          const std::map<int, PsiPosition>& family);

}  // namespace tlog
