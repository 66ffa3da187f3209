#include "wcount/forms.hpp"

#include <cmath>
#include <sstream>

namespace wcount {

namespace {

u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > static_cast<u128>(~static_cast<u128>(0)) / a) {
        throw ArithmeticOverflow("form numerator exceeds 128 bits");
    }
    return a * b;
}

u128 checked_add(u128 a, u128 b) {
    u128 s = a + b;
    if (s < a) throw ArithmeticOverflow("form numerator exceeds 128 bits");
    return s;
}

u128 checked_pow(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

u128 HomogeneousForm::numerator(u64 m, u64 n) const {
    u128 total = 0;
    for (unsigned i = 0; i <= degree; ++i) {
        if (coefficients[i] == 0) continue;
        u128 term = checked_mul(coefficients[i], checked_pow(m, degree - i));
        term = checked_mul(term, checked_pow(n, i));
        total = checked_add(total, term);
    }
    return total;
}

u64 HomogeneousForm::operator()(u64 m, u64 n) const {
    return static_cast<u64>(numerator(m, n) / denominator);
}

HomogeneousForm make_form(unsigned degree, std::vector<u64> coefficients,
                          u64 denominator, std::string name) {
    if (degree < 1) throw InvalidForm("degree must be >= 1");
    if (denominator < 1) throw InvalidForm("denominator must be >= 1");
    if (coefficients.size() != static_cast<std::size_t>(degree) + 1) {
        throw InvalidForm("expected degree+1 coefficients");
    }
    bool any = false;
    for (u64 a : coefficients) any = any || a > 0;
    if (!any) throw InvalidForm("all coefficients are zero");
    HomogeneousForm form{degree, std::move(coefficients), denominator, std::move(name)};
    // finite certificate: numerator mod D is periodic in m and n with period
    // dividing D, so a (2D+d)^2 grid covers every residue combination
    const u64 bound = 2 * denominator + degree;
    for (u64 m = 1; m <= bound; ++m) {
        for (u64 n = 1; n <= bound; ++n) {
            if (form.numerator(m, n) % denominator != 0) {
                std::ostringstream msg;
                msg << "form '" << form.name << "' is not integer-valued at (m,n)=("
                    << m << "," << n << ")";
                throw InvalidForm(msg.str());
            }
        }
    }
    return form;
}

HomogeneousForm su3_form() { return make_form(3, {0, 1, 1, 0}, 2, "su3"); }

HomogeneousForm so5_form() { return make_form(4, {0, 1, 3, 2, 0}, 6, "so5"); }

HomogeneousForm parse_form(const std::string& text) {
    if (text == "su3") return su3_form();
    if (text == "so5") return so5_form();
    // "d:D:a_0,a_1,...,a_d"
    std::istringstream in(text);
    std::string deg_part, den_part, coeff_part;
    if (!std::getline(in, deg_part, ':') || !std::getline(in, den_part, ':') ||
        !std::getline(in, coeff_part)) {
        throw InvalidForm("expected 'd:D:a_0,a_1,...,a_d' or a preset name");
    }
    unsigned degree = 0;
    u64 denominator = 0;
    std::vector<u64> coefficients;
    try {
        degree = static_cast<unsigned>(std::stoul(deg_part));
        denominator = std::stoull(den_part);
        std::istringstream coeffs(coeff_part);
        std::string item;
        while (std::getline(coeffs, item, ',')) {
            if (!item.empty() && item[0] == '-') {
                throw InvalidForm("negative coefficients are unsupported");
            }
            coefficients.push_back(std::stoull(item));
        }
    } catch (const InvalidForm&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidForm("malformed form description '" + text + "'");
    }
    return make_form(degree, std::move(coefficients), denominator, text);
}

u64 count_under(const HomogeneousForm& form, u64 x) {
    if (x < 1) throw UnsupportedParameter("count_under requires x >= 1");
    bool depends_on_n = false, depends_on_m = false;
    for (unsigned i = 0; i <= form.degree; ++i) {
        if (form.coefficients[i] == 0) continue;
        if (i >= 1) depends_on_n = true;
        if (i < form.degree) depends_on_m = true;
    }
    if (!depends_on_n || !depends_on_m) {
        throw InvalidForm("form must depend on both variables for a finite count");
    }
    const u128 target = checked_mul(form.denominator, x);
    u64 total = 0;
    for (u64 m = 1; form.numerator(m, 1) <= target; ++m) {
        u64 lo = 1, hi = 2;
        while (form.numerator(m, hi) <= target) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            u64 mid = lo + (hi - lo) / 2;
            if (form.numerator(m, mid) <= target) lo = mid;
            else hi = mid;
        }
        total += lo;
    }
    return total;
}

ExponentFit exponent_fit(const HomogeneousForm& form, const std::vector<u64>& x_grid) {
    ExponentFit fit;
    for (u64 x : x_grid) {
        u64 c = count_under(form, x);
        if (c >= 1) fit.grid.emplace_back(x, c);
    }
    if (fit.grid.size() < 2) throw UnsupportedParameter("exponent_fit needs >= 2 usable grid points");
    const std::size_t n = fit.grid.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, c] : fit.grid) {
        double lx = std::log(static_cast<double>(x));
        double ly = std::log(static_cast<double>(c));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    double det = n * sxx - sx * sx;
    if (det == 0.0) throw UnsupportedParameter("exponent_fit grid is degenerate");
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy * sxx - sx * sxy) / det;
    double var_y = n * syy - sy * sy;
    fit.r_squared = var_y == 0.0 ? 1.0 : (n * sxy - sx * sy) * (n * sxy - sx * sy) / (det * var_y);
    return fit;
}

}  // namespace wcount
