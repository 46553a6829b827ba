#include "weights.hpp"

#include <cmath>
#include <sstream>

namespace modzeta {

std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::ONE: return "1";
    case Basis::H1_K: return "H_k";
    case Basis::H1_2K: return "H_2k";
    case Basis::H2_K: return "H2_k";
    case Basis::H2_2K: return "H2_2k";
    case Basis::H3_K: return "H3_k";
    case Basis::H3_2K: return "H3_2k";
    case Basis::INVSQ_2K1: return "1/(2k+1)^2";
    case Basis::H2_2K_TIMES_DH1: return "H2_2k*(H_2k-H_k)";
    case Basis::H2_K_TIMES_DH1: return "H2_k*(H_2k-H_k)";
    case Basis::H3MIX: return "H3_k-3*H2_k*(H_2k-H_k)";
    }
    return "?";
}

WeightSpec& WeightSpec::add(Rational coeff, Basis basis)
{
    terms_.push_back({coeff, basis});
    return *this;
}

std::string WeightSpec::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")*" << basis_name(t.basis);
    }
    return first ? "0" : os.str();
}

}  // namespace modzeta

namespace modzeta::detail {

HarmonicState::HarmonicState()
    : h1_k_(0), h2_k_(0), h3_k_(0), h1_2k_(0), h2_2k_(0), h3_2k_(0)
{
}

void HarmonicState::advance()
{
    ++k_;
    Real inv = Real(1) / k_;
    Real inv2 = sqr(inv);
    h1_k_ += inv;
    h2_k_ += inv2;
    h3_k_ += inv2 * inv;
    for (long n = 2 * k_ - 1; n <= 2 * k_; ++n) {
        Real a = Real(1) / n;
        Real a2 = sqr(a);
        h1_2k_ += a;
        h2_2k_ += a2;
        h3_2k_ += a2 * a;
    }
}

Real HarmonicState::basis(Basis b) const
{
    switch (b) {
    case Basis::ONE: return Real(1);
    case Basis::H1_K: return h1_k_;
    case Basis::H1_2K: return h1_2k_;
    case Basis::H2_K: return h2_k_;
    case Basis::H2_2K: return h2_2k_;
    case Basis::H3_K: return h3_k_;
    case Basis::H3_2K: return h3_2k_;
    case Basis::INVSQ_2K1: return Real(1) / sqr(Real(2 * k_ + 1));
    case Basis::H2_2K_TIMES_DH1: return h2_2k_ * (h1_2k_ - h1_k_);
    case Basis::H2_K_TIMES_DH1: return h2_k_ * (h1_2k_ - h1_k_);
    case Basis::H3MIX: return h3_k_ - 3 * h2_k_ * (h1_2k_ - h1_k_);
    }
    throw DomainError("unknown weight basis");
}

namespace {

Real harmonic(long n, int r)
{
    Real s(0);
    for (long j = 1; j <= n; ++j)
        s += Real(1) / int_power_real(j, r);
    return s;
}

}  // namespace

Real int_power_real(long n, int r)
{
    Real p(1);
    for (int i = 0; i < r; ++i)
        p *= n;
    return p;
}

Real basis_direct(Basis b, long k)
{
    switch (b) {
    case Basis::ONE: return Real(1);
    case Basis::H1_K: return harmonic(k, 1);
    case Basis::H1_2K: return harmonic(2 * k, 1);
    case Basis::H2_K: return harmonic(k, 2);
    case Basis::H2_2K: return harmonic(2 * k, 2);
    case Basis::H3_K: return harmonic(k, 3);
    case Basis::H3_2K: return harmonic(2 * k, 3);
    case Basis::INVSQ_2K1: return Real(1) / sqr(Real(2 * k + 1));
    case Basis::H2_2K_TIMES_DH1: return harmonic(2 * k, 2) * (harmonic(2 * k, 1) - harmonic(k, 1));
    case Basis::H2_K_TIMES_DH1: return harmonic(k, 2) * (harmonic(2 * k, 1) - harmonic(k, 1));
    case Basis::H3MIX: return harmonic(k, 3) - 3 * harmonic(k, 2) * (harmonic(2 * k, 1) - harmonic(k, 1));
    }
    throw DomainError("unknown weight basis");
}

WeightEval::WeightEval(const WeightSpec& w)
{
    for (const auto& t : w.terms()) {
        coeffs_.push_back(t.coeff.to_real());
        bases_.push_back(t.basis);
        abs_coeffs_.push_back(std::fabs(static_cast<double>(t.coeff.num) / static_cast<double>(t.coeff.den)));
    }
}

Real WeightEval::operator()(const HarmonicState& h) const
{
    Real s(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s += coeffs_[i] * h.basis(bases_[i]);
    return s;
}

Real WeightEval::direct(long k) const
{
    Real s(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s += coeffs_[i] * basis_direct(bases_[i], k);
    return s;
}

double WeightEval::bound(long k) const
{
    const double h1 = 1.0 + std::log(static_cast<double>(2 * k + 2));
    const double zeta2 = 1.6449340668482264;
    const double zeta3 = 1.2020569031595943;
    const double dh1 = 0.6931471805599454;
    double s = 0.0;
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        double v = 1.0;
        switch (bases_[i]) {
        case Basis::ONE: v = 1.0; break;
        case Basis::H1_K:
        case Basis::H1_2K: v = h1; break;
        case Basis::H2_K:
        case Basis::H2_2K: v = zeta2; break;
        case Basis::H3_K:
        case Basis::H3_2K: v = zeta3; break;
        case Basis::INVSQ_2K1: v = 1.0; break;
        case Basis::H2_2K_TIMES_DH1:
        case Basis::H2_K_TIMES_DH1: v = zeta2 * dh1; break;
        case Basis::H3MIX: v = zeta3 + 3.0 * zeta2 * dh1; break;
        }
        s += abs_coeffs_[i] * v;
    }
    return s;
}

}  // namespace modzeta::detail
