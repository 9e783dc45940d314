#include "heisorb/qseries.hpp"

#include "heisorb/fock.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heisorb {

namespace {

long den_of(const Rational& r) {
    if (!r.get_den().fits_slong_p()) throw std::overflow_error("exponent denominator too large");
    return r.get_den().get_si();
}

long key_of(const Rational& x, long D) {
    Rational k = x * D;
    if (k.get_den() != 1) throw std::logic_error("exponent off the lattice");
    return k.get_num().get_si();
}

}  // namespace

FracSeries::FracSeries(long D, Rational offset, Rational top) : D_(D), offset_(std::move(offset)), top_(std::move(top)) {
    if (D_ <= 0) throw std::invalid_argument("lattice denominator must be positive");
}

FracSeries FracSeries::one(Rational top) { return monomial(Rational(0), Rational(1), top); }

FracSeries FracSeries::monomial(const Rational& e, const Rational& c, const Rational& top) {
    FracSeries s(std::lcm(72L, den_of(e)), e, top);
    s.set(0, c);
    return s;
}

void FracSeries::set(long k, const Rational& v) {
    if (k < 0) throw std::logic_error("negative series key");
    if (sgn(v) == 0 || offset_ + make_rational(k, D_) > top_) {
        c_.erase(k);
        return;
    }
    c_[k] = v;
}

void FracSeries::normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (sgn(it->second) == 0 || offset_ + make_rational(it->first, D_) > top_) it = c_.erase(it);
        else ++it;
    }
}

Rational FracSeries::at(const Rational& e) const {
    if (e > top_) throw std::out_of_range("exponent beyond truncation");
    Rational k = (e - offset_) * D_;
    if (k.get_den() != 1 || sgn(k) < 0) return Rational(0);
    auto it = c_.find(k.get_num().get_si());
    return it == c_.end() ? Rational(0) : it->second;
}

std::vector<Rational> FracSeries::integer_steps(int N) const {
    std::vector<Rational> out;
    for (int n = 0; n <= N; ++n) out.push_back(at(offset_ + n));
    return out;
}

Rational FracSeries::valuation() const {
    if (c_.empty()) return top_;
    return offset_ + make_rational(c_.begin()->first, D_);
}

FracSeries FracSeries::relattice(long D) const {
    if (D % D_ != 0) throw std::logic_error("lattice refinement must be a multiple");
    FracSeries s(D, offset_, top_);
    long f = D / D_;
    for (const auto& [k, v] : c_) s.c_[k * f] = v;
    return s;
}

FracSeries FracSeries::rebase(const Rational& offset) const {
    long shift = key_of(offset_ - offset, D_);
    if (shift < 0) throw std::logic_error("rebase must lower the offset");
    FracSeries s(D_, offset, top_);
    for (const auto& [k, v] : c_) s.c_[k + shift] = v;
    return s;
}

FracSeries& FracSeries::operator+=(const FracSeries& o) {
    long D = std::lcm(std::lcm(D_, o.D_), den_of(offset_ - o.offset_));
    Rational base = offset_ < o.offset_ ? offset_ : o.offset_;
    FracSeries a = relattice(D).rebase(base);
    FracSeries b = o.relattice(D).rebase(base);
    a.top_ = top_ < o.top_ ? top_ : o.top_;
    for (const auto& [k, v] : b.c_) a.c_[k] += v;
    a.normalize();
    return *this = std::move(a);
}

FracSeries& FracSeries::operator-=(const FracSeries& o) { return *this += o * Rational(-1); }

FracSeries& FracSeries::operator*=(const Rational& c) {
    for (auto& [k, v] : c_) v *= c;
    normalize();
    return *this;
}

FracSeries operator*(const FracSeries& x, const FracSeries& y) {
    long D = std::lcm(x.D_, y.D_);
    FracSeries a = x.relattice(D), b = y.relattice(D);
    Rational t1 = x.top_ + y.valuation(), t2 = y.top_ + x.valuation();
    FracSeries out(D, x.offset_ + y.offset_, t1 < t2 ? t1 : t2);
    Rational span = (out.top_ - out.offset_) * D;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    const long kmax = fl.get_si();
    for (const auto& [i, u] : a.c_) {
        if (i > kmax) break;
        for (const auto& [j, v] : b.c_) {
            if (i + j > kmax) break;
            out.c_[i + j] += u * v;
        }
    }
    out.normalize();
    return out;
}

FracSeries FracSeries::shifted(const Rational& e) const {
    FracSeries s = *this;
    long D = std::lcm(D_, den_of(e));
    if (D != D_) s = s.relattice(D);
    s.offset_ += e;
    s.top_ += e;
    return s;
}

FracSeries FracSeries::truncated(const Rational& top) const {
    FracSeries s = *this;
    if (top < s.top_) s.top_ = top;
    s.normalize();
    return s;
}

FracSeries FracSeries::inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of a zero series");
    const Rational v = valuation();
    FracSeries g = rebase(offset_).shifted(-v);  // lowest term now at q^0
    {
        FracSeries t(g.D_, Rational(0), g.top_);
        long lo = g.c_.begin()->first;
        for (const auto& [k, c] : g.c_) t.c_[k - lo] = c;
        g = std::move(t);
    }
    const Rational L = g.top_;
    const Rational step = make_rational(1, g.D_);
    FracSeries h(g.D_, Rational(0), Rational(0));
    h.c_[0] = 1 / g.c_.at(0);
    Rational prec = 0;
    while (prec < L) {
        prec = 2 * prec + step;
        if (prec > L) prec = L;
        FracSeries gt = g.truncated(prec);
        h.top_ = prec;
        FracSeries e = gt * h;
        FracSeries two = FracSeries::one(prec) * Rational(2);
        h = (h * (two - e)).truncated(prec);
    }
    return h.shifted(-v);
}

std::string FracSeries::str(std::size_t max_terms) const {
    std::ostringstream os;
    os << "q^(" << offset_.get_str() << ") * (";
    std::size_t n = 0;
    for (const auto& [k, v] : c_) {
        if (n == max_terms) {
            os << " + ...";
            break;
        }
        if (n) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0) os << "-";
        Rational a = abs(v);
        Rational e = make_rational(k, D_);
        bool unit = a == 1 && k != 0;
        if (!unit) os << a.get_str();
        if (k != 0) os << (unit ? "" : " ") << "q^(" << e.get_str() << ")";
        ++n;
    }
    if (c_.empty()) os << "0";
    Rational rel = top_ - offset_;
    os << "), exact through q^(" << rel.get_str() << ")";
    return os.str();
}

FracSeries qpochhammer(const Rational& start, const Rational& step, const Rational& N) {
    if (sgn(start) <= 0 || sgn(step) <= 0) throw std::invalid_argument("q-Pochhammer needs positive exponents");
    FracSeries s = FracSeries::one(N);
    for (Rational e = start; e <= N; e += step) s -= s.shifted(e).truncated(N);
    return s;
}

FracSeries pochhammer_inv(const Rational& step, const Rational& N) { return qpochhammer(step, step, N).inverse(); }

FracSeries burnside_trace(const std::vector<int>& cycle_type, const Rational& N) {
    int n = 0;
    FracSeries s = FracSeries::one(N);
    for (int l : cycle_type) {
        if (l <= 0) throw std::invalid_argument("cycle lengths must be positive");
        n += l;
        s = s * pochhammer_inv(Rational(l), N);
    }
    return s.shifted(make_rational(-n, 24));
}

FracSeries orbifold_character(Group g, const Rational& N) {
    auto els = group_elements(g);
    FracSeries sum;
    bool first = true;
    for (const auto& p : els) {
        FracSeries t = burnside_trace(p.cycle_type(), N);
        if (first) sum = t, first = false;
        else sum += t;
    }
    return sum * make_rational(1, static_cast<long>(els.size()));
}

namespace {

Rational parse_q(const std::string& s) { return parse_rational(s); }

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto c = s.find(',', pos);
        if (c == std::string::npos) c = s.size();
        out.push_back(parse_q(s.substr(pos, c - pos)));
        pos = c + 1;
    }
    return out;
}

Rational half_norm(const std::vector<Rational>& w) {
    Rational s = 0;
    for (const auto& x : w) s += x * x;
    return s / 2;
}

// sum over S3 of chi(g) * trace(g) / 6
FracSeries s3_isotypic(int chi_e, int chi_t, int chi_c, const Rational& N) {
    FracSeries A = burnside_trace({1, 1, 1}, N), B = burnside_trace({2, 1}, N), C = burnside_trace({3}, N);
    return (A * Rational(chi_e) + B * Rational(3 * chi_t) + C * Rational(2 * chi_c)) * make_rational(1, 6);
}

}  // namespace

ModuleId ModuleId::parse(const std::string& text) {
    ModuleId m;
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need = [&](std::size_t n) {
        m.w = parse_list(rest);
        if (m.w.size() != n) throw std::invalid_argument(head + " needs " + std::to_string(n) + " weights");
    };
    if (head == "h3") m.kind = Kind::heisenberg;
    else if (head == "s3" || head == "orb") m.kind = Kind::orbifold_s3;
    else if (head == "z3") m.kind = Kind::orbifold_z3;
    else if (head == "sgn") m.kind = Kind::sgn;
    else if (head == "st") m.kind = Kind::st;
    else if (head == "fock") m.kind = Kind::fock, need(3);
    else if (head == "theta") m.kind = Kind::theta, need(2);
    else if (head == "sigma") m.kind = Kind::sigma, need(1);
    else throw std::invalid_argument("unknown module: " + text);
    if ((m.kind == Kind::fock || m.kind == Kind::theta || m.kind == Kind::sigma) && rest.empty())
        throw std::invalid_argument("missing weights for " + head);
    return m;
}

std::string ModuleId::str() const {
    std::string head;
    switch (kind) {
        case Kind::heisenberg: return "h3";
        case Kind::orbifold_s3: return "s3";
        case Kind::orbifold_z3: return "z3";
        case Kind::sgn: return "sgn";
        case Kind::st: return "st";
        case Kind::fock: head = "fock"; break;
        case Kind::theta: head = "theta"; break;
        case Kind::sigma: head = "sigma"; break;
    }
    head += ":";
    for (std::size_t i = 0; i < w.size(); ++i) head += (i ? "," : "") + w[i].get_str();
    return head;
}

Rational twist_weight(int p, const std::vector<Rational>& r) {
    if (p < 2) throw std::invalid_argument("twist order must be at least 2");
    if (static_cast<int>(r.size()) != p - 1) throw std::invalid_argument("need p-1 multiplicities");
    Rational s = 0;
    for (int i = 1; i < p; ++i) s += Rational(i * (p - i)) * r[static_cast<std::size_t>(i - 1)];
    return s / (4 * p * p);
}

FracSeries module_character(const ModuleId& id, const Rational& N) {
    using K = ModuleId::Kind;
    const Rational c24 = make_rational(-1, 8);  // -c/24 for rank 3
    switch (id.kind) {
        case K::heisenberg: return burnside_trace({1, 1, 1}, N);
        case K::orbifold_s3: return orbifold_character(Group::S3, N);
        case K::orbifold_z3: return orbifold_character(Group::Z3, N);
        case K::sgn: return s3_isotypic(1, -1, 1, N);
        case K::st: return s3_isotypic(2, 0, -1, N);
        case K::fock: return burnside_trace({1, 1, 1}, N).shifted(half_norm(id.w));
        case K::theta: {
            Rational e = twist_weight(2, {Rational(1)}) + c24 + half_norm(id.w);
            return (pochhammer_inv(make_rational(1, 2), N) * pochhammer_inv(Rational(1), N)).shifted(e);
        }
        case K::sigma: {
            Rational e = twist_weight(3, {Rational(1), Rational(1)}) + c24 + half_norm(id.w);
            return pochhammer_inv(make_rational(1, 3), N).shifted(e);
        }
    }
    throw std::logic_error("unhandled module");
}

FracSeries w_algebra_free_character(const std::vector<int>& weights, const Rational& N) {
    FracSeries s = FracSeries::one(N);
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("generator weights must be positive");
        s = s * qpochhammer(Rational(w), Rational(1), N).inverse();
    }
    return s;
}

std::vector<Rational> fock_trace(const Permutation& sigma, int N) {
    const int rank = sigma.degree();
    std::vector<Rational> out;
    for (int n = 0; n <= N; ++n) {
        long fixed = 0;
        for (const auto& m : enumerate_basis(rank, n)) {
            std::vector<Mode> img;
            for (const auto& md : m.modes()) img.push_back({sigma(md.field), md.level});
            if (Monomial(img) == m) ++fixed;
        }
        out.emplace_back(fixed);
    }
    return out;
}

}  // namespace heisorb
