#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homdef/error.hpp"

namespace homdef {

inline bool is_valid_symbol_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

/// Ordered list of parameter symbols, optionally with one of them
/// designated as the deformation variable (conventionally "t").
/// Contexts are immutable and shared by pointer.
class ParameterContext {
public:
    ParameterContext(std::vector<std::string> symbols,
                     std::optional<std::string> deformation = std::nullopt)
        : symbols_(std::move(symbols)) {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (!is_valid_symbol_name(symbols_[i]))
                throw error("invalid symbol name '" + symbols_[i] + "'");
            if (!index_.emplace(symbols_[i], i).second)
                throw error("duplicate symbol '" + symbols_[i] + "'");
        }
        if (deformation) {
            auto it = index_.find(*deformation);
            if (it == index_.end())
                throw error("deformation symbol '" + *deformation +
                            "' is not a context symbol");
            deformation_index_ = it->second;
        }
    }

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> deformation_index() const { return deformation_index_; }

    std::optional<std::string> deformation_symbol() const {
        if (!deformation_index_) return std::nullopt;
        return symbols_[*deformation_index_];
    }

    bool same_as(const ParameterContext& other) const {
        return symbols_ == other.symbols_ &&
               deformation_index_ == other.deformation_index_;
    }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, std::size_t> index_;
    std::optional<std::size_t> deformation_index_;
};

using CtxPtr = std::shared_ptr<const ParameterContext>;

inline CtxPtr make_context(std::vector<std::string> symbols,
                           std::optional<std::string> deformation = std::nullopt) {
    return std::make_shared<const ParameterContext>(std::move(symbols),
                                                    std::move(deformation));
}

inline bool same_context(const CtxPtr& a, const CtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

inline void require_same_context(const CtxPtr& a, const CtxPtr& b) {
    if (!same_context(a, b)) throw context_mismatch("parameter contexts differ");
}

/// Context with extra symbols appended; existing indices keep their meaning.
inline CtxPtr extend_context(const CtxPtr& ctx, const std::vector<std::string>& extra) {
    std::vector<std::string> symbols = ctx->symbols();
    symbols.insert(symbols.end(), extra.begin(), extra.end());
    return make_context(std::move(symbols), ctx->deformation_symbol());
}

/// Position of each of `sub`'s symbols inside `super`; throws when one is
/// missing. Used to lift values into an enlarged context.
inline std::vector<std::size_t> embedding_map(const CtxPtr& sub, const CtxPtr& super) {
    std::vector<std::size_t> map;
    map.reserve(sub->size());
    for (const auto& name : sub->symbols()) {
        auto idx = super->find(name);
        if (!idx)
            throw context_mismatch("symbol '" + name + "' missing from the target context");
        map.push_back(*idx);
    }
    return map;
}

/// Union context: a's symbols in order, then b's new ones. The deformation
/// symbol is taken from a when set, otherwise from b.
inline CtxPtr union_context(const CtxPtr& a, const CtxPtr& b) {
    std::vector<std::string> symbols = a->symbols();
    for (const auto& name : b->symbols())
        if (!a->find(name)) symbols.push_back(name);
    std::optional<std::string> def = a->deformation_symbol();
    if (!def) def = b->deformation_symbol();
    return make_context(std::move(symbols), def);
}

/// Fresh symbol names of the form <base>0..<base>{count-1} that do not
/// collide with anything already in the context.
inline std::vector<std::string> fresh_symbols(const CtxPtr& ctx, std::string base,
                                              std::size_t count) {
    for (;;) {
        std::vector<std::string> names;
        bool clash = false;
        for (std::size_t i = 0; i < count; ++i) {
            std::string n = base + std::to_string(i);
            if (ctx->find(n)) {
                clash = true;
                break;
            }
            names.push_back(n);
        }
        if (!clash) return names;
        base += "v";
    }
}

} // namespace homdef
