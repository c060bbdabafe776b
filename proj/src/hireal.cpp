#include <reversor/hireal.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace reversor {

namespace {

constexpr mpfr_prec_t kErrorBits = 64;
constexpr int kMinDigits = 50;

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

/// Scratch mpfr with RAII.
class Scratch {
public:
    explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    Scratch(const Scratch &) = delete;
    Scratch &operator=(const Scratch &) = delete;
    ~Scratch() { mpfr_clear(v_); }
    mpfr_ptr get() noexcept { return v_; }
    operator mpfr_ptr() noexcept { return v_; }
    mpfr_ptr operator->() noexcept { return v_; }

private:
    mpfr_t v_;
};

} // namespace

int default_digits() {
    static const int digits = [] {
        if (const char *env = std::getenv("REVERSOR_PRECISION")) {
            char *end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) {
                return static_cast<int>(std::clamp<long>(v, kMinDigits, kDefaultMaxDigits));
            }
        }
        return kDefaultDigits;
    }();
    return digits;
}

int max_digits() noexcept { return kDefaultMaxDigits; }

HiReal::HiReal(int digits) : digits_(std::max(digits, 1)) {
    mpfr_init2(value_, digits_to_bits(digits_));
    mpfr_init2(error_, kErrorBits);
    mpfr_set_zero(value_, 1);
    mpfr_set_zero(error_, 1);
}

HiReal::HiReal(const HiReal &other) : digits_(other.digits_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_init2(error_, kErrorBits);
    mpfr_set(value_, other.value_, MPFR_RNDN);
    mpfr_set(error_, other.error_, MPFR_RNDU);
}

HiReal::HiReal(HiReal &&other) noexcept : HiReal(other.digits_) {
    mpfr_swap(value_, other.value_);
    mpfr_swap(error_, other.error_);
}

HiReal &HiReal::operator=(const HiReal &other) {
    if (this != &other) {
        digits_ = other.digits_;
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        mpfr_set(error_, other.error_, MPFR_RNDU);
    }
    return *this;
}

HiReal &HiReal::operator=(HiReal &&other) noexcept {
    std::swap(digits_, other.digits_);
    mpfr_swap(value_, other.value_);
    mpfr_swap(error_, other.error_);
    return *this;
}

HiReal::~HiReal() {
    mpfr_clear(value_);
    mpfr_clear(error_);
}

mpfr_prec_t HiReal::bits() const noexcept { return mpfr_get_prec(value_); }

void HiReal::finish(int ternary) {
    if (ternary == 0 || mpfr_zero_p(value_)) {
        return;
    }
    // |value| < 2^exp, so one ulp is at most 2^(exp - prec).
    Scratch ulp(kErrorBits);
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(value_) - mpfr_get_prec(value_), MPFR_RNDU);
    mpfr_add(error_, error_, ulp, MPFR_RNDU);
}

HiReal HiReal::from_nat(const Nat &value, int digits) {
    HiReal r(digits);
    r.finish(mpfr_set_z(r.value_, value.mpz().get_mpz_t(), MPFR_RNDN));
    return r;
}

HiReal HiReal::from_rat(const Rat &value, int digits) {
    HiReal r(digits);
    r.finish(mpfr_set_q(r.value_, value.mpq().get_mpq_t(), MPFR_RNDN));
    return r;
}

HiReal HiReal::from_long(long value, int digits) {
    HiReal r(digits);
    r.finish(mpfr_set_si(r.value_, value, MPFR_RNDN));
    return r;
}

HiReal HiReal::from_double(double value, int digits) {
    HiReal r(digits);
    r.finish(mpfr_set_d(r.value_, value, MPFR_RNDN));
    return r;
}

long double HiReal::error_bound() const { return mpfr_get_ld(error_, MPFR_RNDU); }

bool HiReal::error_within(const Rat &limit) const { return mpfr_cmp_q(error_, limit.mpq().get_mpq_t()) <= 0; }

std::string HiReal::decimal(int significant) const {
    if (significant <= 0) {
        significant = digits_;
    }
    char *buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*RNg", significant, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

std::string HiReal::error_string() const {
    char *buffer = nullptr;
    mpfr_asprintf(&buffer, "%.3RUe", error_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

double HiReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

Certified HiReal::compare(const Rat &threshold) const {
    Scratch bound(mpfr_get_prec(value_) + kErrorBits);
    mpfr_sub(bound, value_, error_, MPFR_RNDD);
    if (mpfr_cmp_q(bound, threshold.mpq().get_mpq_t()) > 0) {
        return Certified::greater;
    }
    mpfr_add(bound, value_, error_, MPFR_RNDU);
    if (mpfr_cmp_q(bound, threshold.mpq().get_mpq_t()) < 0) {
        return Certified::less;
    }
    return Certified::indeterminate;
}

Certified HiReal::compare(const HiReal &other) const { return (*this - other).sign(); }

Certified HiReal::sign() const { return compare(Rat(0)); }

HiReal HiReal::center() const {
    HiReal r(*this);
    mpfr_set_zero(r.error_, 1);
    return r;
}

HiReal HiReal::midpoint(const HiReal &a, const HiReal &b) {
    HiReal r(std::max(a.digits_, b.digits_));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    mpfr_div_2ui(r.value_, r.value_, 1, MPFR_RNDN);
    return r;
}

HiReal operator+(const HiReal &a, const HiReal &b) {
    HiReal r(std::max(a.digits_, b.digits_));
    mpfr_add(r.error_, a.error_, b.error_, MPFR_RNDU);
    r.finish(mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN));
    return r;
}

HiReal operator-(const HiReal &a, const HiReal &b) {
    HiReal r(std::max(a.digits_, b.digits_));
    mpfr_add(r.error_, a.error_, b.error_, MPFR_RNDU);
    r.finish(mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN));
    return r;
}

HiReal operator*(const HiReal &a, const HiReal &b) {
    HiReal r(std::max(a.digits_, b.digits_));
    Scratch t(kErrorBits);
    Scratch m(kErrorBits);
    // |a| eb + |b| ea + ea eb
    mpfr_abs(m, a.value_, MPFR_RNDU);
    mpfr_mul(t, m, b.error_, MPFR_RNDU);
    mpfr_set(r.error_, t, MPFR_RNDU);
    mpfr_abs(m, b.value_, MPFR_RNDU);
    mpfr_mul(t, m, a.error_, MPFR_RNDU);
    mpfr_add(r.error_, r.error_, t, MPFR_RNDU);
    mpfr_mul(t, a.error_, b.error_, MPFR_RNDU);
    mpfr_add(r.error_, r.error_, t, MPFR_RNDU);
    r.finish(mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN));
    return r;
}

HiReal operator/(const HiReal &a, const HiReal &b) {
    HiReal r(std::max(a.digits_, b.digits_));
    Scratch denom(kErrorBits);
    mpfr_abs(denom, b.value_, MPFR_RNDD);
    mpfr_sub(denom, denom, b.error_, MPFR_RNDD);
    if (mpfr_sgn(denom) <= 0) {
        throw std::domain_error("HiReal: divisor not separated from zero");
    }
    const int ternary = mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    // (ea + |a/b| eb) / (|b| - eb)
    Scratch t(kErrorBits);
    mpfr_abs(t, r.value_, MPFR_RNDU);
    mpfr_nextabove(t);
    mpfr_mul(t, t, b.error_, MPFR_RNDU);
    mpfr_add(t, t, a.error_, MPFR_RNDU);
    mpfr_div(r.error_, t, denom, MPFR_RNDU);
    r.finish(ternary);
    return r;
}

HiReal operator-(const HiReal &a) {
    HiReal r(a);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

HiReal abs(const HiReal &a) {
    HiReal r(a);
    mpfr_abs(r.value_, r.value_, MPFR_RNDN);
    return r;
}

HiReal log(const HiReal &a) {
    HiReal r(a.digits_);
    Scratch lower(kErrorBits);
    mpfr_sub(lower, a.value_, a.error_, MPFR_RNDD);
    if (mpfr_sgn(lower) <= 0) {
        throw std::domain_error("HiReal: log argument not certified positive");
    }
    // log(a) - log(a - ea) <= ea / (a - ea)
    mpfr_div(r.error_, a.error_, lower, MPFR_RNDU);
    r.finish(mpfr_log(r.value_, a.value_, MPFR_RNDN));
    return r;
}

HiReal log1p(const HiReal &a) {
    HiReal r(a.digits_);
    Scratch lower(kErrorBits);
    mpfr_sub(lower, a.value_, a.error_, MPFR_RNDD);
    mpfr_add_ui(lower, lower, 1, MPFR_RNDD);
    if (mpfr_sgn(lower) <= 0) {
        throw std::domain_error("HiReal: log1p argument not certified above -1");
    }
    mpfr_div(r.error_, a.error_, lower, MPFR_RNDU);
    r.finish(mpfr_log1p(r.value_, a.value_, MPFR_RNDN));
    return r;
}

HiReal exp(const HiReal &a) {
    HiReal r(a.digits_);
    const int ternary = mpfr_exp(r.value_, a.value_, MPFR_RNDN);
    // exp(a) * expm1(ea), with exp(a) taken one ulp high
    Scratch t(kErrorBits);
    mpfr_expm1(t, a.error_, MPFR_RNDU);
    Scratch m(kErrorBits);
    mpfr_set(m, r.value_, MPFR_RNDU);
    mpfr_nextabove(m);
    mpfr_mul(r.error_, t, m, MPFR_RNDU);
    r.finish(ternary);
    return r;
}

HiReal rootn(const HiReal &a, unsigned long q) {
    if (q == 0) {
        throw std::domain_error("HiReal: zeroth root");
    }
    HiReal r(a.digits_);
    if (q == 1) {
        return a;
    }
    Scratch lower(mpfr_get_prec(a.value_));
    mpfr_sub(lower, a.value_, a.error_, MPFR_RNDD);
    if (mpfr_sgn(lower) <= 0) {
        throw std::domain_error("HiReal: root argument not certified positive");
    }
    // concavity: |root(a') - root(a)| <= ea / (q root(a - ea)^(q-1))
    Scratch d(kErrorBits);
    mpfr_rootn_ui(d, lower, q, MPFR_RNDD);
    mpfr_pow_ui(d, d, q - 1, MPFR_RNDD);
    mpfr_mul_ui(d, d, q, MPFR_RNDD);
    mpfr_div(r.error_, a.error_, d, MPFR_RNDU);
    r.finish(mpfr_rootn_ui(r.value_, a.value_, q, MPFR_RNDN));
    return r;
}

HiReal pow(const HiReal &a, unsigned long e) {
    HiReal r(a.digits_);
    if (e == 0) {
        mpfr_set_ui(r.value_, 1, MPFR_RNDN);
        return r;
    }
    // (|a| + ea)^e - |a|^e
    const mpfr_prec_t p = mpfr_get_prec(a.value_) + kErrorBits;
    Scratch up(p);
    Scratch down(p);
    mpfr_abs(up, a.value_, MPFR_RNDU);
    mpfr_add(up, up, a.error_, MPFR_RNDU);
    mpfr_pow_ui(up, up, e, MPFR_RNDU);
    mpfr_abs(down, a.value_, MPFR_RNDD);
    mpfr_pow_ui(down, down, e, MPFR_RNDD);
    mpfr_sub(r.error_, up, down, MPFR_RNDU);
    r.finish(mpfr_pow_ui(r.value_, a.value_, e, MPFR_RNDN));
    return r;
}

} // namespace reversor
