#include "equicorr/literal.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace equicorr {

namespace {

long parse_offset(std::string_view text) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("sequence literal: bad offset '" + std::string(text) + "'");
    return value;
}

bool all_signs(std::string_view body) {
    for (char ch : body)
        if (ch != '+' && ch != '-') return false;
    return !body.empty();
}

}  // namespace

IntLaurentSeq parse_sequence(std::string_view text) {
    long offset = 0;
    if (auto at = text.rfind('@'); at != std::string_view::npos) {
        offset = parse_offset(text.substr(at + 1));
        text = text.substr(0, at);
    }
    if (text.empty()) throw std::invalid_argument("sequence literal: empty");

    std::vector<mpz_class> coeffs;
    if (all_signs(text)) {
        coeffs.reserve(text.size());
        for (char ch : text) coeffs.emplace_back(ch == '+' ? 1 : -1);
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (item.empty()) throw std::invalid_argument("sequence literal: empty coefficient");
            for (std::size_t i = 0; i < item.size(); ++i) {
                char ch = item[i];
                bool ok = (std::isdigit(static_cast<unsigned char>(ch)) != 0) || (i == 0 && (ch == '-' || ch == '+'));
                if (!ok) throw std::invalid_argument("sequence literal: bad coefficient '" + std::string(item) + "'");
            }
            coeffs.emplace_back(std::string(item), 10);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return IntLaurentSeq(offset, std::move(coeffs));
}

std::string format_sequence(const IntLaurentSeq& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool sign_form = true;
    for (const auto& c : f.coeffs())
        if (c != 1 && c != -1) {
            sign_form = false;
            break;
        }
    if (sign_form) {
        for (const auto& c : f.coeffs()) out += (c == 1 ? '+' : '-');
    } else {
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            if (i > 0) out += ',';
            out += f.coeffs()[i].get_str();
        }
    }
    if (f.offset() != 0) out += "@" + std::to_string(f.offset());
    return out;
}

std::string poly_debug_string(const IntLaurentSeq& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        const mpz_class& c = f.coeffs()[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.get_str();
        if (k == 1) out += unit ? "z" : " z";
        if (k > 1) out += (unit ? "z^" : " z^") + std::to_string(k);
    }
    return out;
}

}  // namespace equicorr
