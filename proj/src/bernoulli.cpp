#include "zlab/bernoulli.hpp"

#include <array>
#include <cassert>
#include <cstdlib>

namespace zlab {

namespace {

struct Fraction {
    const char* num;
    const char* den;
};

// Exact values of B_2..B_60 (even-index Bernoulli numbers).
constexpr Fraction kTable[kBernoulliCount] = {
    {"1", "6"},
    {"-1", "30"},
    {"1", "42"},
    {"-1", "30"},
    {"5", "66"},
    {"-691", "2730"},
    {"7", "6"},
    {"-3617", "510"},
    {"43867", "798"},
    {"-174611", "330"},
    {"854513", "138"},
    {"-236364091", "2730"},
    {"8553103", "6"},
    {"-23749461029", "870"},
    {"8615841276005", "14322"},
    {"-7709321041217", "510"},
    {"2577687858367", "6"},
    {"-26315271553053477373", "1919190"},
    {"2929993913841559", "6"},
    {"-261082718496449122051", "13530"},
    {"1520097643918070802691", "1806"},
    {"-27833269579301024235023", "690"},
    {"596451111593912163277961", "282"},
    {"-5609403368997817686249127547", "46410"},
    {"495057205241079648212477525", "66"},
    {"-801165718135489957347924991853", "1590"},
    {"29149963634884862421418123812691", "798"},
    {"-2479392929313226753685415739663229", "870"},
    {"84483613348880041862046775994036021", "354"},
    {"-1215233140483755572040304994079820246041491", "56786730"},
};

struct Tables {
    std::array<double, kBernoulliCount + 1> b2k{};
    std::array<double, kBernoulliCount + 1> b2k_over_fact{};
    std::array<double, kBernoulliCount + 1> stirling{};

    Tables() {
        long double fact = 1.0L;  // (2k)!
        for (int k = 1; k <= kBernoulliCount; ++k) {
            const Fraction& f = kTable[k - 1];
            long double num = strtold(f.num, nullptr);
            long double den = strtold(f.den, nullptr);
            long double b = num / den;
            fact *= (2.0L * k - 1.0L) * (2.0L * k);
            b2k[k] = static_cast<double>(b);
            b2k_over_fact[k] = static_cast<double>(b / fact);
            stirling[k] = static_cast<double>(b / (2.0L * k * (2.0L * k - 1.0L)));
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

double bernoulli_2k(int k) {
    assert(k >= 1 && k <= kBernoulliCount);
    return tables().b2k[static_cast<size_t>(k)];
}

double bernoulli_2k_over_factorial(int k) {
    assert(k >= 1 && k <= kBernoulliCount);
    return tables().b2k_over_fact[static_cast<size_t>(k)];
}

double bernoulli_2k_stirling_weight(int k) {
    assert(k >= 1 && k <= kBernoulliCount);
    return tables().stirling[static_cast<size_t>(k)];
}

}  // namespace zlab
