#include "omega/rat.hpp"

namespace omega {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace omega
