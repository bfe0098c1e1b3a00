#include "sbinv/json_util.hpp"

#include <cstdint>
#include <limits>

#include "sbinv/error.hpp"

namespace sbinv {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned())
        return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw Error("not an integer: \"" + s + "\"");
        }
    }
    throw Error("expected an integer (number or decimal string), got " + j.dump());
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace sbinv
