#pragma once

// Data model for finite weak higher-dimensional transition systems:
// alphabets, systems (states, labelled actions, n-transitions) and
// morphisms, together with the axiom checks and the closure fixpoint.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hdts {

using Index = std::uint32_t;

/// Dimension bound used by generators and truncated objects unless overridden.
inline constexpr int kDefaultMaxDimension = 4;

/// An input refers to something that does not exist, or is malformed.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed input violates an operation's precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The three nested categories: weak, cubical and regular systems.
enum class Variant { wts, cts, rts };

std::string to_string(Variant v);
Variant parse_variant(std::string_view text);  // throws ArgumentError

/// Finite nonempty set of labels, kept sorted.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(std::string_view label) const;
  Index index_of(std::string_view label) const;  // throws ArgumentError

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// An n-transition (source, u_1 .. u_n, target) in index form.
struct Transition {
  Index source = 0;
  std::vector<Index> actions;
  Index target = 0;

  std::size_t dimension() const { return actions.size(); }
  auto operator<=>(const Transition&) const = default;
};

struct TransitionHash {
  std::size_t operator()(const Transition& t) const noexcept;
};

using TransitionSet = std::unordered_set<Transition, TransitionHash>;
using StateSet = std::set<Index>;

struct ActionDecl {
  std::string id;
  std::string label;
  bool operator==(const ActionDecl&) const = default;
};

struct TransitionDecl {
  std::string source;
  std::vector<std::string> actions;
  std::string target;
};

/// Immutable transition system. Copies share storage.
///
/// States are sorted by name and actions by identifier, so indices follow
/// lexicographic order. Transitions are stored explicitly, every
/// permutation included, in sorted order.
class TransitionSystem {
 public:
  /// Builds from named data. Unresolved references and duplicate names
  /// raise StructuralError. The transition set is taken as given: no
  /// closure is applied and the axioms are not checked.
  TransitionSystem(Alphabet alphabet, std::vector<std::string> states,
                   std::vector<ActionDecl> actions,
                   const std::vector<TransitionDecl>& transitions);

  /// Empty system over an alphabet.
  explicit TransitionSystem(Alphabet alphabet);

  const Alphabet& alphabet() const { return data_->alphabet; }

  std::size_t state_count() const { return data_->states.size(); }
  const std::string& state_name(Index s) const { return data_->states.at(s); }
  const std::vector<std::string>& state_names() const { return data_->states; }
  std::optional<Index> find_state(std::string_view name) const;
  Index state_index(std::string_view name) const;  // throws StructuralError

  std::size_t action_count() const { return data_->action_ids.size(); }
  const std::string& action_name(Index a) const { return data_->action_ids.at(a); }
  Index action_label(Index a) const { return data_->action_labels.at(a); }
  const std::string& action_label_name(Index a) const {
    return alphabet().label(action_label(a));
  }
  std::optional<Index> find_action(std::string_view id) const;
  Index action_index(std::string_view id) const;  // throws StructuralError

  std::span<const Transition> transitions() const { return data_->transitions; }
  std::size_t transition_count() const { return data_->transitions.size(); }
  bool contains(const Transition& t) const { return data_->lookup.contains(t); }
  std::size_t max_dimension() const { return data_->max_dimension; }
  std::size_t count_of_dimension(std::size_t n) const;

  /// True when the transition set is closed under permutation of actions.
  bool multiset_closed() const { return data_->multiset_closed; }

  /// Label word (mu(u_1) .. mu(u_n)) of a transition.
  std::vector<Index> label_word(const Transition& t) const;

  std::string format(const Transition& t) const;

  bool operator==(const TransitionSystem& other) const;

 private:
  friend class SystemBuilder;
  struct Data {
    Alphabet alphabet;
    std::vector<std::string> states;
    std::vector<std::string> action_ids;
    std::vector<Index> action_labels;
    std::vector<Transition> transitions;
    TransitionSet lookup;
    std::unordered_map<std::string, Index> state_by_name;
    std::unordered_map<std::string, Index> action_by_name;
    std::size_t max_dimension = 0;
    bool multiset_closed = true;
  };
  explicit TransitionSystem(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> finish(Data data);

  std::shared_ptr<const Data> data_;
};

/// Incremental construction with builder-local indices. build() sorts
/// names and reports how local indices map to final ones.
class SystemBuilder {
 public:
  explicit SystemBuilder(Alphabet alphabet);

  /// Adds a state; a name seen before returns the existing local index.
  Index add_state(std::string name);
  /// Adds an action; reusing an id with a different label is an error.
  Index add_action(std::string id, std::string_view label);
  Index add_action_with_label(std::string id, Index label);
  void add_transition(Transition t);  // builder-local indices

  std::size_t state_count() const { return states_.size(); }
  std::size_t action_count() const { return actions_.size(); }

  struct Result {
    TransitionSystem system;
    std::vector<Index> state_index;   // local -> final
    std::vector<Index> action_index;  // local -> final
  };
  /// With close=true the transition set is replaced by its closure.
  Result build(bool close = false) &&;

 private:
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, Index> state_lookup_;
  std::vector<std::pair<std::string, Index>> actions_;
  std::unordered_map<std::string, Index> action_lookup_;
  std::vector<Transition> transitions_;
};

/// Map of systems: a state map and an action map. Validity is a separate
/// check (check_morphism).
struct Morphism {
  TransitionSystem source;
  TransitionSystem target;
  std::vector<Index> state_map;
  std::vector<Index> action_map;

  Transition apply(const Transition& t) const;
  bool operator==(const Morphism&) const = default;
};

struct Violation {
  std::string axiom;
  std::string detail;
  std::vector<Transition> witnesses;  // transitions present in the checked system
  std::optional<Transition> missing;  // required tuple that is absent
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Multiset and patching axiom scan with explicit witnesses. Each missing
/// tuple is reported once, with the first witness in transition order.
ValidationReport validate(const TransitionSystem& x);

/// Answers "which states divide t after its first k actions" in one
/// system, i.e. nu with (src, u_1..u_k, nu) and (nu, u_{k+1}..u_n, tgt).
class DivisionIndex {
 public:
  explicit DivisionIndex(std::span<const Transition> transitions);
  explicit DivisionIndex(const TransitionSet& transitions);

  /// Sorted dividing states; 1 <= k < dimension.
  std::vector<Index> dividers(const Transition& t, std::size_t k) const;

 private:
  void add(const Transition& t);
  void finish();
  std::unordered_map<Transition, std::vector<Index>, TransitionHash> prefix_;
  std::unordered_map<Transition, std::vector<Index>, TransitionHash> suffix_;
};

/// Smallest superset of the transitions closed under both axioms; states
/// and actions unchanged.
TransitionSystem closure(const TransitionSystem& x);

/// Closes a raw transition set in place over fixed states and actions.
void close_transitions(TransitionSet& transitions);

/// X restricted to the given states: all actions kept, transitions with
/// both endpoints inside.
TransitionSystem restrict(const TransitionSystem& x, const StateSet& states);

/// Resolves a name-level morphism description. Partial or dangling maps
/// raise StructuralError.
Morphism resolve_morphism(const TransitionSystem& source, const TransitionSystem& target,
                          const std::map<std::string, std::string>& states,
                          const std::map<std::string, std::string>& actions);

ValidationReport check_morphism(const Morphism& f);

/// Structural error if map sizes or indices do not fit the objects.
void require_well_formed(const Morphism& f);

Morphism identity(const TransitionSystem& x);
/// Map sending every state and action of `sub` to the same name in
/// `super`; StructuralError when a name is missing.
Morphism inclusion(const TransitionSystem& sub, const TransitionSystem& super);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

struct MonoVerdict {
  bool mono = false;
  /// A pair of distinct elements with the same image, when not mono.
  std::optional<std::pair<Index, Index>> collapsed_states;
  std::optional<std::pair<Index, Index>> collapsed_actions;
};

/// Monomorphisms are exactly the maps injective on states and on actions.
MonoVerdict is_mono(const Morphism& f);

bool is_injective_on_states(const Morphism& f);
bool is_surjective_on_states(const Morphism& f);

/// Bijective on states and actions and on transitions.
bool is_isomorphism(const Morphism& f);
/// Inverse of an isomorphism; ArgumentError otherwise.
Morphism inverse(const Morphism& f);

/// Searches an isomorphism X -> Y by backtracking; deterministic.
std::optional<Morphism> find_isomorphism(const TransitionSystem& x, const TransitionSystem& y);

/// Distinct permutations of an action sequence, in lexicographic order.
std::vector<std::vector<Index>> permutations(std::vector<Index> actions);

std::string format_report(const ValidationReport& report, const TransitionSystem& x);

}  // namespace hdts
