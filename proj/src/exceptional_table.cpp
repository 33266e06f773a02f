#include "orbitcalc/poset.hpp"

namespace orbitcalc {

bool is_exceptional_group_name(std::string_view name) {
    return name == "G2" || name == "F4" || name == "E6" || name == "E7" ||
           name == "E8";
}

// Complete related-orbit table for the exceptional groups, by Bala-Carter
// name. The boolean marks special orbits (Lusztig-Spaltenstein); "A~1" is
// the twisted A1.
const std::vector<RelatedClass>& embedded_related_table() {
    static const std::vector<RelatedClass> table = {
        {"G2", {{"G2(a1)", true}, {"A~1", false}}},
        {"F4", {{"F4(a1)", true}, {"F4(a2)", true}}},
        {"F4", {{"F4(a3)", true}, {"C3(a1)", false}}},
        {"E6", {{"E6(a1)", true}, {"D5", true}}},
        {"E6", {{"D4(a1)", true}, {"A3+A1", false}}},
        {"E7", {{"E7(a1)", true}, {"E7(a2)", true}}},
        {"E7", {{"E7(a3)", true}, {"D6", false}}},
        {"E7", {{"E6(a1)", true}, {"E7(a4)", true}}},
        {"E8", {{"E8(a1)", true}, {"E8(a2)", true}, {"E8(a3)", true}}},
        {"E8", {{"E8(a4)", true}, {"E8(b4)", true}, {"E8(a5)", true}}},
        {"E8", {{"E7(a1)", true}, {"E8(b5)", true}, {"E7(a2)", false}}},
        {"E8", {{"E8(a6)", true}, {"D7(a1)", true}}},
        {"E8", {{"E6(a1)", true}, {"E7(a4)", true}}},
        {"E8",
         {{"E8(a7)", true}, {"E7(a5)", false}, {"E6(a3)+A1", false}, {"D6(a2)", false}}},
    };
    return table;
}

std::vector<RelatedClass> embedded_related_table(const std::string& group) {
    std::vector<RelatedClass> out;
    for (const auto& cls : embedded_related_table())
        if (cls.group == group) out.push_back(cls);
    return out;
}

}  // namespace orbitcalc
