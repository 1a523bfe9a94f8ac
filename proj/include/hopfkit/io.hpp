#pragma once

#include "hopfkit/comodule.hpp"
#include "hopfkit/homotopy.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit::io {

using nlohmann::json;

// Malformed or inconsistent input; what() names the structure and field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { Coalgebra, Algebra, Hopf, Module, Morphism, Tangential, HomotopyPair };
std::string kind_text(Kind k);

// One structure as read from a file. Structures are kept as unvalidated data so that
// `check` can report axiom failures; the Library accessors validate.
struct Item {
    std::string name;
    Kind kind = Kind::Coalgebra;
    std::optional<CoalgebraData> coalgebra;
    std::optional<AlgebraData> algebra;
    std::optional<HopfData> hopf;
    std::optional<ModuleData> module;
    std::string over;            // modules: the Hopf algebra acted on
    std::string source, target;  // morphisms, tangential elements, pairs
    std::string map_class;       // morphisms: coalgebra, hopf, algebra, module, linear
    GradedMap map;
    std::optional<HomotopyPair> pair;
};

struct LoadOptions {
    std::optional<int> trunc;  // overrides the truncation of tensor and cobar constructions
};

class Library {
public:
    // Throws ParseError.
    void load_file(const std::string& path, const LoadOptions& opt = {});
    void load(const json& doc, const LoadOptions& opt = {}, const std::string& origin = "<json>");

    const std::vector<Item>& items() const { return items_; }
    const Item* find(const std::string& name) const;
    const Item& get(const std::string& name) const;  // throws ParseError

    // Validated views; throw StructureError on failing axioms, ParseError on wrong kind.
    Coalgebra coalgebra(const std::string& name) const;  // "k" is k^∨; a Hopf algebra gives its coalgebra
    Hopf hopf(const std::string& name) const;            // "k" is the ground Hopf algebra
    DgModule module(const std::string& name) const;
    Space space(const std::string& name) const;

    std::vector<const Item*> of_kind(Kind k) const;

private:
    std::vector<Item> items_;
    mutable std::map<std::string, Coalgebra> coalg_cache_;
    mutable std::map<std::string, Hopf> hopf_cache_;
    mutable std::map<std::string, DgModule> module_cache_;
    Item parse_item(const json& j, const LoadOptions& opt) const;
};

// Explicit tables; constructions are expanded.
json item_to_json(const Item& item);
json library_to_json(const Library& lib);

json map_to_json(const GradedMap& f);
GradedMap map_from_json(const json& entries, const Space& s, const Space& t, int degree, const std::string& where);
json label_to_json(const std::vector<std::string>& label);
json vector_to_json(const Space& s, const SparseVec& v);

bool same_item(const Item& a, const Item& b);

}  // namespace hopfkit::io
