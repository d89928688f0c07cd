#include "torsionkit/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "torsionkit/abelian.hpp"

namespace torsionkit {

namespace {

// The integral tensor M ⊗_Z N: direct sum of Z/d_ij over basis pairs, with
// elements encoded as mixed-radix integers (row-major over (i, j), first
// coordinate most significant).
struct IntegralTensor {
    std::vector<int> radix;  // flattened d_ij
    int size = 1;

    std::vector<int> decode(int t) const {
        std::vector<int> c(radix.size());
        for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
            c[i] = t % radix[i];
            t /= radix[i];
        }
        return c;
    }
    int encode(const std::vector<int>& c) const {
        int t = 0;
        for (std::size_t i = 0; i < radix.size(); ++i) t = t * radix[i] + c[i];
        return t;
    }
    int add(int s, int t) const {
        auto a = decode(s), b = decode(t);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % radix[i];
        return encode(a);
    }
    int neg(int t) const {
        auto a = decode(t);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (radix[i] - a[i]) % radix[i];
        return encode(a);
    }
    int scale(int t, int k) const {
        auto a = decode(t);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = static_cast<int>((static_cast<long long>(a[i]) * k) % radix[i]);
        return encode(a);
    }
};

}  // namespace

TensorProduct tensor_over_ring(const ModulePtr& left, const BimodulePtr& right, const Caps& caps) {
    if (left->ring() != right->ring())
        throw IllFormed("tensor: factors must share a ring");
    const FiniteModule& M = *left;
    const FiniteBimodule& N = *right;
    const RingPtr& ring = left->ring();
    const int n = ring->order();

    CyclicDecomposition dm = decompose_abelian(M);
    CyclicDecomposition dn = decompose_abelian(N);
    const int km = static_cast<int>(dm.basis.size());
    const int kn = static_cast<int>(dn.basis.size());

    IntegralTensor t0;
    t0.radix.reserve(km * kn);
    long long size = 1;
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j) {
            int d = std::gcd(dm.orders[i], dn.orders[j]);
            t0.radix.push_back(d);
            size *= d;
            if (size > caps.tensor_intermediate)
                throw OrderCapExceeded("tensor of '" + M.name() + "' and '" + N.name() +
                                       "': integral tensor exceeds cap " +
                                       std::to_string(caps.tensor_intermediate));
        }
    t0.size = static_cast<int>(size);

    // The universal bilinear map into the integral tensor.
    auto beta0 = [&](int x, int y) {
        std::vector<int> c(t0.radix.size());
        const auto& p = dm.coords[x];
        const auto& q = dn.coords[y];
        for (int i = 0; i < km; ++i)
            for (int j = 0; j < kn; ++j) {
                int d = t0.radix[i * kn + j];
                c[i * kn + j] = (p[i] * q[j]) % d;
            }
        return t0.encode(c);
    };

    // Balancing subgroup U = < beta0(x r, y) - beta0(x, r y) >. The defect is
    // additive in x and in y, so generators over basis pairs suffice.
    std::vector<int> defects;
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j)
            for (int r = 0; r < n; ++r) {
                int x = dm.basis[i], y = dn.basis[j];
                int defect = t0.add(beta0(M.act(x, r), y), t0.neg(beta0(x, N.lact(r, y))));
                if (defect != 0 &&
                    std::find(defects.begin(), defects.end(), defect) == defects.end())
                    defects.push_back(defect);
            }
    std::vector<char> in_u(t0.size, 0);
    in_u[0] = 1;
    std::vector<int> u_members{0};
    std::vector<int> work;
    auto add_member = [&](int g) {
        if (in_u[g]) return;
        in_u[g] = 1;
        u_members.push_back(g);
        work.push_back(g);
    };
    for (int d : defects) add_member(d);
    while (!work.empty()) {
        int g = work.back();
        work.pop_back();
        // Pair g with every member, including ones appended mid-loop; every
        // pair of final members is covered when its later element is popped.
        for (std::size_t i = 0; i < u_members.size(); ++i) add_member(t0.add(g, u_members[i]));
    }

    // Quotient classes, indexed by smallest integral representative.
    std::sort(u_members.begin(), u_members.end());
    std::vector<int> class_of(t0.size, -1);
    std::vector<int> rep;
    for (int t = 0; t < t0.size; ++t) {
        if (class_of[t] >= 0) continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(t);
        for (int u : u_members) class_of[t0.add(t, u)] = id;
    }
    const int q = static_cast<int>(rep.size());

    // Right action transported from N: on a simple tensor u_i ⊗ v_j the image
    // under r is beta0(u_i, v_j r), extended additively via coordinates.
    auto act_t0 = [&](int t, int r) {
        auto c = t0.decode(t);
        int acc = 0;
        for (int i = 0; i < km; ++i)
            for (int j = 0; j < kn; ++j) {
                int cij = c[i * kn + j];
                if (cij == 0) continue;
                acc = t0.add(acc, t0.scale(beta0(dm.basis[i], N.act(dn.basis[j], r)), cij));
            }
        return acc;
    };

    ModuleTables tables;
    tables.name = "tensor(" + M.name() + "," + N.name() + ")";
    tables.order = q;
    tables.add.resize(q * q);
    tables.act.resize(q * n);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) tables.add[i * q + j] = class_of[t0.add(rep[i], rep[j])];
        for (int r = 0; r < n; ++r) tables.act[i * n + r] = class_of[act_t0(rep[i], r)];
    }

    TensorProduct out;
    out.module = validate_module(tables, ring, caps);
    out.left = left;
    out.right = right;
    out.basis_left = dm.basis;
    out.basis_right = dn.basis;
    out.beta.assign(M.order(), std::vector<int>(N.order()));
    for (int x = 0; x < M.order(); ++x)
        for (int y = 0; y < N.order(); ++y) out.beta[x][y] = class_of[beta0(x, y)];
    out.pair_order.assign(km, std::vector<int>(kn));
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j) out.pair_order[i][j] = t0.radix[i * kn + j];
    auto to_matrix = [&](int t) {
        auto flat = t0.decode(t);
        std::vector<std::vector<int>> m(km, std::vector<int>(kn));
        for (int a = 0; a < km; ++a)
            for (int b = 0; b < kn; ++b) m[a][b] = flat[a * kn + b];
        return m;
    };
    out.rep_coords.resize(q);
    for (int i = 0; i < q; ++i) out.rep_coords[i] = to_matrix(rep[i]);
    out.defect_coords.reserve(defects.size());
    for (int d : defects) out.defect_coords.push_back(to_matrix(d));
    return out;
}

ModuleDerivation tensor_derivation(const TensorProduct& tensor, const ModuleDerivation& d_left,
                                   const ModuleDerivation& d_right) {
    if (d_left.module != tensor.left || d_right.module != tensor.right)
        throw IllFormed("tensor derivation: derivations must live on the tensor factors");
    if (d_left.delta.table != d_right.delta.table)
        throw IllFormed("tensor derivation: factors reference different ring derivations");
    if (!satisfies_left_derivation_law(*tensor.right, d_right.delta, d_right.table))
        throw IllFormed(
            "tensor derivation: right factor derivation violates the left-sided law "
            "d(r y) = delta(r) y + r d(y), so the map does not descend to the tensor");

    const FiniteModule& T = *tensor.module;
    const int km = static_cast<int>(tensor.basis_left.size());
    const int kn = static_cast<int>(tensor.basis_right.size());

    // Image of each simple tensor u_i ⊗ v_j: d(u_i) ⊗ v_j + u_i ⊗ d(v_j).
    // For the additive extension over coordinates to be consistent, d_ij
    // times the image must vanish.
    std::vector<std::vector<int>> image(km, std::vector<int>(kn));
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j) {
            int ui = tensor.basis_left[i], vj = tensor.basis_right[j];
            image[i][j] = T.add(tensor.beta[d_left(ui)][vj], tensor.beta[ui][d_right(vj)]);
            int acc = T.zero();
            for (int k = 0; k < tensor.pair_order[i][j]; ++k) acc = T.add(acc, image[i][j]);
            if (acc != T.zero())
                throw IllFormed("tensor derivation: induced map is not additive on the tensor");
        }

    // The transported map must kill the balancing subgroup to descend.
    auto transported = [&](const std::vector<std::vector<int>>& coords) {
        int acc = T.zero();
        for (int i = 0; i < km; ++i)
            for (int j = 0; j < kn; ++j)
                for (int k = 0; k < coords[i][j]; ++k) acc = T.add(acc, image[i][j]);
        return acc;
    };
    for (const auto& defect : tensor.defect_coords)
        if (transported(defect) != T.zero())
            throw IllFormed("tensor derivation: induced map does not kill the balancing relations");

    std::vector<int> table(T.order());
    for (int t = 0; t < T.order(); ++t) table[t] = transported(tensor.rep_coords[t]);

    ModuleDerivation out{tensor.module, d_left.delta, std::move(table)};
    if (!is_module_derivation(T, out.delta, out.table))
        throw Error("internal: tensor derivation failed its own law");
    return out;
}

}  // namespace torsionkit
