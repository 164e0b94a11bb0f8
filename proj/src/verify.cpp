#include "dihedral/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

#include "dihedral/affine.hpp"
#include "dihedral/equivalence.hpp"
#include "dihedral/oracle.hpp"
#include "dihedral/spaces.hpp"

namespace dihedral {

namespace {

using oracle::RawAutomorphism;

class Recorder {
public:
    explicit Recorder(Int n) : n_(n) {}

    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        auto it = std::find_if(results_.begin(), results_.end(), [&](const CheckResult& r) { return r.check == name; });
        if (it == results_.end()) {
            results_.push_back({n_, name, ok, ok ? std::string{} : detail});
        } else if (it->ok && !ok) {
            it->ok = false;
            it->detail = detail;
        }
    }

    std::vector<CheckResult> take() && { return std::move(results_); }

private:
    Int n_;
    std::vector<CheckResult> results_;
};

bool matches(const AffineAut& theta, const RawAutomorphism& p) {
    for (const auto& x : enumerate(theta.modulus()))
        if (apply(theta, x) != p(x)) return false;
    return true;
}

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok; });
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.ok; }));
}

std::vector<CheckResult> verify_modulus(Modulus n, const VerifyOptions& options) {
    Recorder rec(n.value());
    const Int nv = n.value();
    const auto label = [](const AffineAut& t) { return to_string(t); };

    // Automorphism group: raw maps <-> affine maps.
    const auto raw = oracle::all_automorphisms_bf(n);
    rec.check("aut_group_size", static_cast<Int>(raw.size()) == nv * euler_phi(nv),
              "oracle found " + std::to_string(raw.size()) + " automorphisms");

    std::map<std::pair<Int, Int>, std::size_t> raw_index;  // (a, b) -> position in raw
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& p = raw[i];
        bool ok = !p.image_of_r().is_reflection() && p.image_of_s().is_reflection() &&
                  gcd(p.image_of_r().rotation_index(), nv) == 1;
        if (ok) {
            const AffineAut theta(n, p.image_of_r().rotation_index(), p.image_of_s().rotation_index());
            ok = matches(theta, p) && raw_index.emplace(std::pair(theta.a().value(), theta.b().value()), i).second;
        }
        rec.check("aut_bijection", ok, "raw automorphism #" + std::to_string(i) + " has no unique affine match");
    }

    for (Int k = 1; k <= options.max_k; ++k) {
        const std::string ks = " k=" + std::to_string(k);

        std::vector<AffineAut> expected;
        for (const auto& p : raw)
            if (oracle::has_order_dividing(p, k))
                expected.emplace_back(n, p.image_of_r().rotation_index(), p.image_of_s().rotation_index());
        std::sort(expected.begin(), expected.end());
        const auto autk = enumerate_aut_k(n, k);
        rec.check("enumerate_aut_k", autk == expected, "mismatch at" + ks);
        rec.check("count_aut_k", count_aut_k(n, k) == static_cast<Int>(expected.size()), "mismatch at" + ks);
        for (const auto& theta : autk)
            rec.check("has_order_dividing", has_order_dividing(theta, k) && k % aut_order(theta) == 0,
                      label(theta) + ks);

        const auto classes = enumerate_classes(n, k);
        Int total = 0;
        std::map<Int, Int> per_a;
        for (const auto& c : classes) {
            total += c.size;
            ++per_a[c.a.value()];
            const AffineAut rep = c.representative();
            for (Int b : c.members) {
                const AffineAut member(n, c.a.value(), b);
                rec.check("class_members_equivalent", are_equivalent(rep, member), label(member) + ks);
            }
        }
        rec.check("class_sizes_sum", total == count_aut_k(n, k), "sum " + std::to_string(total) + ks);
        for (std::size_t i = 0; i + 1 < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size() && classes[j].a == classes[i].a; ++j)
                rec.check("class_reps_distinct", !are_equivalent(classes[i].representative(), classes[j].representative()),
                          label(classes[i].representative()) + " ~ " + label(classes[j].representative()) + ks);
        for (const auto& a : kth_roots_of_unity(n, k)) {
            const Int formula = count_classes_Na(n, k, a);
            rec.check("count_classes_Na", formula == per_a[a.value()], "a=" + std::to_string(a.value()) + ks);
            if (k == 2) {
                rec.check("involution_Na", involution_Na(n, a) == formula && formula <= 2,
                          "a=" + std::to_string(a.value()));
            }
        }
        if (k == 2) {
            rec.check("count_involution_classes", count_involution_classes(n) == static_cast<Int>(classes.size()),
                      "C_n formula " + std::to_string(count_involution_classes(n)) + " vs " +
                          std::to_string(classes.size()) + " enumerated");
            rec.check("count_involutions", count_involutions(n) == static_cast<Int>(autk.size()));
        }

        // Spaces for automorphisms of order exactly k.
        for (const auto& theta : autk) {
            if (aut_order(theta) != k) continue;
            const auto& p = raw[raw_index.at({theta.a().value(), theta.b().value()})];
            const auto bf = oracle::spaces_bf(p);
            const auto H = fixed_group(theta);
            const auto Q = symmetric_space(theta);
            rec.check("fixed_group", H == bf.H, label(theta));
            rec.check("symmetric_space", Q == bf.Q, label(theta));
            rec.check("h_orbits", h_orbits_on_q(theta) == oracle::h_orbits_bf(p), label(theta));
            bool single_orbit = true;
            try {
                single_orbit = g_orbits_on_q(theta) == 1;
            } catch (const std::logic_error&) {
                single_orbit = false;
            }
            rec.check("g_orbits", single_orbit, label(theta));

            const auto hq = hq_equals_g(theta);
            if (hq.b_in_image)
                rec.check("hq_tfae", hq.hq_is_g == hq.trivial_intersection && hq.hq_is_g == hq.gcd_coprime, label(theta));
            else
                rec.check("hq_tfae", !hq.hq_is_g, label(theta));

            const auto q_gen = q_subgroup(theta);
            if (q_gen) rec.check("q_subgroup", q_gen->elements().size() == Q.size() &&
                                                   std::all_of(Q.begin(), Q.end(), [&](const Element& q) {
                                                       return q_gen->contains(q.rotation_index());
                                                   }),
                                 label(theta));

            if (k <= 2) {
                const auto R = twisted_involutions(theta);
                rec.check("twisted_involutions", R == bf.R, label(theta));
                rec.check("q_within_r", std::includes(R.begin(), R.end(), Q.begin(), Q.end()), label(theta));
                rec.check("r_equals_q_iff_b_outside", (R == Q) == !hq.b_in_image, label(theta));
                rec.check("q_subgroup", q_gen.has_value(), label(theta) + " Q not a subgroup");
            }
        }
    }

    if (nv <= options.equivalence_max_n && options.max_k >= 2) {
        const auto inv = enumerate_aut_k(n, 2);
        for (const auto& t1 : inv)
            for (const auto& t2 : inv) {
                const auto& p1 = raw[raw_index.at({t1.a().value(), t1.b().value()})];
                const auto& p2 = raw[raw_index.at({t2.a().value(), t2.b().value()})];
                rec.check("are_equivalent_vs_search", are_equivalent(t1, t2) == oracle::equivalent_bf(p1, p2, raw),
                          label(t1) + " vs " + label(t2));
            }
    }
    return std::move(rec).take();
}

VerifyReport verify_sweep(const VerifyOptions& options) {
    if (options.min_n < 3 || options.max_n < options.min_n || options.max_k < 1)
        throw std::invalid_argument("verify needs 3 <= min_n <= max_n and max_k >= 1");

    const Int workers = std::max<Int>(1, static_cast<Int>(std::thread::hardware_concurrency()));
    std::vector<std::future<std::vector<CheckResult>>> pending;
    for (Int w = 0; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, [&options, w, workers] {
            std::vector<CheckResult> out;
            for (Int n = options.min_n + w; n <= options.max_n; n += workers) {
                auto part = verify_modulus(Modulus(n), options);
                out.insert(out.end(), part.begin(), part.end());
            }
            return out;
        }));
    }
    VerifyReport report;
    for (auto& f : pending) {
        auto part = f.get();
        report.results.insert(report.results.end(), part.begin(), part.end());
    }
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const CheckResult& x, const CheckResult& y) { return x.n < y.n; });
    return report;
}

}  // namespace dihedral
