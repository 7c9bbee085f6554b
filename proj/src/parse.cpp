#include "moonj/parse.hpp"

#include "moonj/errors.hpp"

namespace moonj {

Rational parse_number(std::string text) {
    if (!text.empty() && text.front() == '+') text.erase(text.begin());
    size_t dot = text.find('.');
    if (dot == std::string::npos) return Rational::parse(text);
    if (text.find('/') != std::string::npos)
        fail(errc::invalid_parameters, "mixed decimal and fraction: " + text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        fail(errc::invalid_parameters, "malformed decimal: " + text);
    Rational scale = Rational::pow(Rational(10), static_cast<long>(frac_len));
    return Rational::parse(digits) / scale;
}

TValue parse_t(const std::string& text) {
    if (text == "sqrt3-1") return {true, Rational(0)};
    return {false, parse_number(text)};
}

Complex t_complex(const TValue& t, mpfr_prec_t bits) {
    if (t.symbolic) return Complex(sqrt(Real::of(3L, bits)) - Real::of(1L, bits));
    return Complex::of(t.exact, bits);
}

Complex parse_tau(const std::string& text, mpfr_prec_t bits) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) fail(errc::invalid_parameters, "empty tau literal");
    if (s == "i" || s == "+i") return Complex::i_unit(bits);
    if (s.back() != 'i') return Complex(Real::of(parse_number(s), bits));
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t idx = body.size(); idx-- > 1;) {
        if (body[idx] == '+' || body[idx] == '-') {
            split = idx;
            break;
        }
    }
    std::string re_text, im_text;
    if (split == std::string::npos) {
        re_text = "0";
        im_text = body;
    } else {
        re_text = body.substr(0, split);
        im_text = body.substr(split);
    }
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    return {Real::of(parse_number(re_text), bits), Real::of(parse_number(im_text), bits)};
}

}  // namespace moonj
