#include "pforge/env.hpp"

#include <numeric>

namespace pforge {

static std::size_t shape_size(const std::vector<int>& a,
                              const std::vector<int>& b) {
    std::size_t n = 1;
    for (int d : a) n *= static_cast<std::size_t>(d);
    for (int d : b) n *= static_cast<std::size_t>(d);
    return n;
}

std::size_t LinMap::flat_index(const std::vector<int>& tgt,
                               const std::vector<int>& src) const {
    if (tgt.size() != tgt_dims.size() || src.size() != src_dims.size())
        throw error("LinMap index arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < tgt.size(); ++i) {
        if (tgt[i] < 0 || tgt[i] >= tgt_dims[i])
            throw error("LinMap target index out of range");
        idx = idx * tgt_dims[i] + tgt[i];
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] < 0 || src[i] >= src_dims[i])
            throw error("LinMap source index out of range");
        idx = idx * src_dims[i] + src[i];
    }
    return idx;
}

const Scalar& LinMap::at(const std::vector<int>& tgt,
                         const std::vector<int>& src) const {
    return entries[flat_index(tgt, src)];
}

void LinMap::set(const std::vector<int>& tgt, const std::vector<int>& src,
                 const Scalar& v) {
    entries[flat_index(tgt, src)] = v;
}

bool LinMap::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

bool LinMap::operator==(const LinMap& o) const {
    return source == o.source && target == o.target && entries == o.entries;
}

bool StructureEnv::has_space(const std::string& name) const {
    for (const auto& s : spaces)
        if (s.name == name) return true;
    return false;
}

const SpaceDecl& StructureEnv::space(const std::string& name) const {
    for (const auto& s : spaces)
        if (s.name == name) return s;
    throw error("unknown space '" + name + "'");
}

int StructureEnv::dim(const std::string& space_name) const {
    return space(space_name).dim;
}

void StructureEnv::add_space(const std::string& name, int d,
                             std::vector<std::string> labels) {
    if (has_space(name)) throw error("duplicate space '" + name + "'");
    if (d < 0) throw error("negative dimension for space '" + name + "'");
    if (!labels.empty() && static_cast<int>(labels.size()) != d)
        throw error("basis label count mismatch for space '" + name + "'");
    spaces.push_back(SpaceDecl{name, d, std::move(labels)});
}

LinMap& StructureEnv::add_zero_map(const std::string& name,
                                   const std::vector<std::string>& source,
                                   const std::vector<std::string>& target) {
    if (maps.count(name)) throw error("duplicate map '" + name + "'");
    return maps.emplace(name, make_zero_map(*this, source, target))
        .first->second;
}

bool StructureEnv::has_map(const std::string& name) const {
    return maps.count(name) != 0;
}

const LinMap& StructureEnv::map_at(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw error("unknown map '" + name + "'");
    return it->second;
}

LinMap& StructureEnv::map_at(const std::string& name) {
    auto it = maps.find(name);
    if (it == maps.end()) throw error("unknown map '" + name + "'");
    return it->second;
}

std::string StructureEnv::basis_label(const std::string& space_name,
                                      int i) const {
    const SpaceDecl& s = space(space_name);
    if (!s.basis_labels.empty()) return s.basis_labels[i];
    return s.name + "[" + std::to_string(i) + "]";
}

LinMap make_zero_map(const StructureEnv& env,
                     const std::vector<std::string>& source,
                     const std::vector<std::string>& target) {
    LinMap m;
    m.source = source;
    m.target = target;
    for (const auto& s : source) m.src_dims.push_back(env.dim(s));
    for (const auto& t : target) m.tgt_dims.push_back(env.dim(t));
    m.entries.assign(shape_size(m.tgt_dims, m.src_dims),
                     Scalar::zero(env.field));
    return m;
}

LinMap permute_legs(const LinMap& m, const std::vector<int>& perm) {
    if (perm.size() != m.target.size())
        throw error("permute_legs: permutation length " +
                    std::to_string(perm.size()) + " != output leg count " +
                    std::to_string(m.target.size()));
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
            throw error("permute_legs: not a permutation");
        seen[p] = true;
    }
    LinMap out;
    out.source = m.source;
    out.src_dims = m.src_dims;
    out.target.resize(perm.size());
    out.tgt_dims.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.target[i] = m.target[perm[i]];
        out.tgt_dims[i] = m.tgt_dims[perm[i]];
    }
    out.entries.assign(m.entries.size(), Scalar());
    std::vector<int> t(out.tgt_dims.size(), 0), old_t(m.tgt_dims.size(), 0);
    std::vector<int> s(m.src_dims.size(), 0);
    if (m.entries.empty()) return out;
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) old_t[perm[i]] = t[i];
        std::vector<int> s2(m.src_dims.size(), 0);
        do {
            out.set(t, s2, m.at(old_t, s2));
        } while (next_tuple(s2, m.src_dims));
    } while (next_tuple(t, out.tgt_dims));
    return out;
}

bool next_tuple(std::vector<int>& idx, const std::vector<int>& dims) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < dims[i]) return true;
        idx[i] = 0;
    }
    return false;
}

std::string tuple_to_string(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

}  // namespace pforge
