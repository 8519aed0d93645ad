#include "mcop/gt.hpp"

#include "mcop/num.hpp"

#include <set>

#include "mcop/decomposition.hpp"

namespace mcop {

void validate_gt_spec(const GTSpec& spec) {
    if (spec.n < 1) throw Error("n must be at least 1");
    if (static_cast<int>(spec.lambda.size()) != spec.n + 1)
        throw Error("marking must have length n + 1");
    for (size_t i = 0; i < spec.lambda.size(); ++i) {
        if (spec.lambda[i] < 0) throw Error("marking entries must be nonnegative");
        if (i > 0 && spec.lambda[i] > spec.lambda[i - 1])
            throw Error("marking must be weakly decreasing");
    }
}

std::string gt_label(int i, int j) {
    if (i <= 9 && j <= 9) return "p" + std::to_string(i) + std::to_string(j);
    return "p" + std::to_string(i) + "_" + std::to_string(j);
}

MarkedPoset build_gt_poset(const GTSpec& spec) {
    validate_gt_spec(spec);
    const int n = spec.n;

    std::vector<std::string> elements;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i) elements.push_back(gt_label(i, j));

    std::vector<std::pair<std::string, std::string>> relations;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i) {
            relations.emplace_back(gt_label(i - 1, j), gt_label(i, j));
            relations.emplace_back(gt_label(i, j), gt_label(i - 1, j - 1));
        }

    std::map<std::string, Int> marking;
    for (int k = 0; k <= n; ++k) marking[gt_label(0, k)] = spec.lambda[k];
    return MarkedPoset(Poset::from_relations(elements, relations), marking);
}

mpz_class weyl_dimension(const GTSpec& spec) {
    validate_gt_spec(spec);
    mpz_class num = 1, den = 1;
    for (int i = 0; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j) {
            num *= to_mpz(spec.lambda[i] - spec.lambda[j] + j - i);
            den *= mpz_class(j - i);
        }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

long long count_signature_classes(int n) {
    if (n < 1) throw Error("n must be at least 1");
    GTSpec spec;
    spec.n = n;
    for (int k = 0; k <= n; ++k) spec.lambda.push_back(n - k);
    MarkedPoset m = build_gt_poset(spec);
    std::set<std::vector<int>> signatures;
    for (const Decomposition& d : enumerate_admissible(m)) signatures.insert(star_signature(m, d));
    return static_cast<long long>(signatures.size());
}

} // namespace mcop
