#include "pforge/term.hpp"

#include <algorithm>

namespace pforge {

static std::size_t total_size(const std::vector<int>& dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

DenseArray DenseArray::zeros(const std::vector<int>& dims, const FieldSpec& f) {
    DenseArray a;
    a.dims = dims;
    a.data.assign(total_size(dims), Scalar::zero(f));
    return a;
}

std::size_t DenseArray::flat_index(const std::vector<int>& idx) const {
    if (idx.size() != dims.size()) throw error("DenseArray index arity mismatch");
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= dims[i])
            throw error("DenseArray index out of range");
        f = f * dims[i] + idx[i];
    }
    return f;
}

const Scalar& DenseArray::at(const std::vector<int>& idx) const {
    return data[flat_index(idx)];
}

Scalar& DenseArray::at(const std::vector<int>& idx) {
    return data[flat_index(idx)];
}

bool DenseArray::is_zero() const {
    for (const auto& s : data)
        if (!s.is_zero()) return false;
    return true;
}

bool DenseArray::operator==(const DenseArray& o) const {
    return dims == o.dims && data == o.data;
}

std::string DenseArray::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i) s += ", ";
        s += data[i].to_string();
    }
    return s + "]";
}

// Shared leg-bookkeeping for one step: given the current leg spaces, checks
// the step against the env and returns the new leg list.  Also fills
// `keep_positions` (surviving old positions in order) when requested.
static std::vector<std::string> step_legs(
    const TermStep& st, const StructureEnv& env,
    const std::vector<std::string>& legs,
    std::vector<int>* keep_positions, std::string* err) {
    auto fail = [&](const std::string& m) {
        if (err) *err = m;
        return std::vector<std::string>{};
    };
    if (!env.has_map(st.map)) return fail("unknown map '" + st.map + "'");
    const LinMap& m = env.map_at(st.map);
    if (st.consume.size() != m.source.size())
        return fail("map '" + st.map + "' consumes " +
                    std::to_string(m.source.size()) + " legs, got " +
                    std::to_string(st.consume.size()));
    std::vector<bool> used(legs.size(), false);
    for (std::size_t i = 0; i < st.consume.size(); ++i) {
        int c = st.consume[i];
        if (c < 0 || c >= static_cast<int>(legs.size()) || used[c])
            return fail("map '" + st.map + "': bad or repeated leg index " +
                        std::to_string(c));
        used[c] = true;
        if (legs[c] != m.source[i])
            return fail("map '" + st.map + "': source slot " +
                        std::to_string(i) + " expects space " + m.source[i] +
                        " but leg " + std::to_string(c) + " is " + legs[c]);
    }
    std::vector<std::string> remaining;
    for (std::size_t i = 0; i < legs.size(); ++i)
        if (!used[i]) {
            remaining.push_back(legs[i]);
            if (keep_positions) keep_positions->push_back(static_cast<int>(i));
        }
    if (st.insert_at < 0 || st.insert_at > static_cast<int>(remaining.size()))
        return fail("map '" + st.map + "': insert position " +
                    std::to_string(st.insert_at) + " out of range");
    std::vector<std::string> out(remaining.begin(),
                                 remaining.begin() + st.insert_at);
    out.insert(out.end(), m.target.begin(), m.target.end());
    out.insert(out.end(), remaining.begin() + st.insert_at, remaining.end());
    return out;
}

DenseArray evaluate_term(const TensorTerm& term, const StructureEnv& env,
                         const std::vector<int>& basis_tuple,
                         const std::vector<std::string>& input_spaces,
                         const std::vector<std::string>& output_spaces) {
    if (basis_tuple.size() != input_spaces.size())
        throw error("basis tuple arity mismatch");
    std::vector<std::string> legs = input_spaces;
    std::vector<int> dims;
    for (const auto& s : legs) dims.push_back(env.dim(s));
    DenseArray state = DenseArray::zeros(dims, env.field);
    if (!state.data.empty()) state.at(basis_tuple) = Scalar::one(env.field);

    for (const TermStep& st : term.steps) {
        std::string err;
        std::vector<int> keep;
        std::vector<std::string> new_legs = step_legs(st, env, legs, &keep, &err);
        if (!err.empty()) throw error("term step error: " + err);
        const LinMap& m = env.map_at(st.map);
        std::vector<int> new_dims;
        for (const auto& s : new_legs) new_dims.push_back(env.dim(s));
        DenseArray next = DenseArray::zeros(new_dims, env.field);
        if (!state.data.empty() && !next.data.empty()) {
            std::vector<int> old_idx(legs.size(), 0);
            std::vector<int> src(m.source.size(), 0);
            std::vector<int> new_idx(new_legs.size(), 0);
            const std::size_t nremain = keep.size();
            do {
                const Scalar& x = state.at(old_idx);
                if (x.is_zero()) continue;
                for (std::size_t i = 0; i < src.size(); ++i)
                    src[i] = old_idx[st.consume[i]];
                std::vector<int> t(m.target.size(), 0);
                do {
                    const Scalar& c = m.at(t, src);
                    if (c.is_zero()) continue;
                    for (int i = 0; i < st.insert_at; ++i)
                        new_idx[i] = old_idx[keep[i]];
                    for (std::size_t i = 0; i < t.size(); ++i)
                        new_idx[st.insert_at + i] = t[i];
                    for (std::size_t i = st.insert_at; i < nremain; ++i)
                        new_idx[i + t.size()] = old_idx[keep[i]];
                    next.at(new_idx) += c * x;
                } while (next_tuple(t, m.tgt_dims));
            } while (next_tuple(old_idx, dims));
        }
        state = std::move(next);
        legs = std::move(new_legs);
        dims = std::move(new_dims);
    }

    if (!term.out_perm.empty()) {
        if (term.out_perm.size() != legs.size())
            throw error("term output permutation arity mismatch");
        std::vector<std::string> plegs(legs.size());
        std::vector<int> pdims(legs.size());
        for (std::size_t i = 0; i < legs.size(); ++i) {
            plegs[i] = legs[term.out_perm[i]];
            pdims[i] = dims[term.out_perm[i]];
        }
        DenseArray perm_state = DenseArray::zeros(pdims, env.field);
        if (!perm_state.data.empty()) {
            std::vector<int> t(pdims.size(), 0), o(dims.size(), 0);
            do {
                for (std::size_t i = 0; i < t.size(); ++i)
                    o[term.out_perm[i]] = t[i];
                perm_state.at(t) = state.at(o);
            } while (next_tuple(t, pdims));
        }
        state = std::move(perm_state);
        legs = std::move(plegs);
    }

    if (legs != output_spaces)
        throw error("term output spaces mismatch: produced " +
                    [&] {
                        std::string s;
                        for (const auto& l : legs) s += l + " ";
                        return s;
                    }() +
                    "but the identity declares a different signature");
    if (term.coeff != 1) {
        Scalar c = Scalar::from_int(term.coeff, env.field);
        for (auto& v : state.data) v *= c;
    }
    return state;
}

std::vector<IdentityViolation> evaluate_identity(const IdentityDescriptor& desc,
                                                 const StructureEnv& env) {
    std::vector<IdentityViolation> out;
    std::vector<int> in_dims, out_dims;
    for (const auto& s : desc.input_spaces) in_dims.push_back(env.dim(s));
    for (const auto& s : desc.output_spaces) out_dims.push_back(env.dim(s));
    if (total_size(in_dims) == 0) return out;  // vacuous
    std::vector<int> tuple(in_dims.size(), 0);
    do {
        DenseArray diff = DenseArray::zeros(out_dims, env.field);
        auto accumulate = [&](const std::vector<TensorTerm>& terms, bool plus) {
            for (const TensorTerm& t : terms) {
                DenseArray v = evaluate_term(t, env, tuple, desc.input_spaces,
                                             desc.output_spaces);
                for (std::size_t i = 0; i < diff.data.size(); ++i) {
                    if (plus)
                        diff.data[i] += v.data[i];
                    else
                        diff.data[i] -= v.data[i];
                }
            }
        };
        accumulate(desc.lhs_terms, true);
        accumulate(desc.rhs_terms, false);
        if (!diff.is_zero()) out.push_back(IdentityViolation{tuple, diff});
    } while (next_tuple(tuple, in_dims));
    return out;
}

std::optional<std::string> check_term_shape(
    const TensorTerm& term, const StructureEnv& env,
    const std::vector<std::string>& input_spaces,
    const std::vector<std::string>& output_spaces) {
    std::vector<std::string> legs = input_spaces;
    for (const TermStep& st : term.steps) {
        std::string err;
        legs = step_legs(st, env, legs, nullptr, &err);
        if (!err.empty()) return err;
    }
    if (!term.out_perm.empty()) {
        if (term.out_perm.size() != legs.size())
            return "output permutation arity mismatch";
        std::vector<bool> seen(legs.size(), false);
        std::vector<std::string> plegs(legs.size());
        for (std::size_t i = 0; i < term.out_perm.size(); ++i) {
            int p = term.out_perm[i];
            if (p < 0 || p >= static_cast<int>(legs.size()) || seen[p])
                return "output permutation is not a permutation";
            seen[p] = true;
            plegs[i] = legs[p];
        }
        legs = plegs;
    }
    if (legs != output_spaces) {
        std::string got, want;
        for (const auto& l : legs) got += l;
        for (const auto& l : output_spaces) want += l;
        return "output signature mismatch: produced " + got + ", declared " +
               want;
    }
    return std::nullopt;
}

}  // namespace pforge
