#pragma once

#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include <boost/coroutine2/coroutine.hpp>

#include "partgen/composition.hpp"
#include "partgen/generators.hpp"

namespace partgen {

/*
 * Pull-based view of a visitor-driven generator. The generator runs on its
 * own stack (Boost.Coroutine2) and is suspended at every visit, so the
 * recursive algorithms are resumable without being rewritten.
 *
 * next() returns a view of the live buffer, valid until the following
 * pull. next_composition() copies and validates the current item.
 * Destroying the stream part way through unwinds the suspended generator.
 */
class composition_stream {
    using coro = boost::coroutines2::coroutine<std::span<const part_t>>;

public:
    // Room for the recursive generators at several thousand levels.
    static constexpr std::size_t stack_bytes = std::size_t{1} << 20;

    explicit composition_stream(generator_spec spec)
        : spec_(spec)
    {
        // Surface domain errors at construction instead of on the coroutine stack.
        detail::require_n(spec.n);
        if (spec.m && (*spec.m < 1 || *spec.m > spec.n))
            throw domain_error("m must satisfy 1 <= m <= n");
        if (spec.m && spec.kind != algo::rec_asc && spec.kind != algo::rec_desc)
            throw domain_error(std::string(name(spec.kind)) + " takes no m parameter");
        source_.emplace(boost::coroutines2::fixedsize_stack(stack_bytes),
                        [s = spec](coro::push_type& sink) {
                            generate(s, [&sink](std::span<const part_t> parts) { sink(parts); });
                        });
    }

    composition_stream(const composition_stream&) = delete;
    composition_stream& operator=(const composition_stream&) = delete;
    composition_stream(composition_stream&&) = default;
    composition_stream& operator=(composition_stream&&) = default;

    const generator_spec& spec() const noexcept { return spec_; }

    std::optional<std::span<const part_t>> next()
    {
        if (!primed_)
            primed_ = true;
        else if (*source_)
            (*source_)();
        if (!*source_)
            return std::nullopt;
        return source_->get();
    }

    std::optional<composition> next_composition()
    {
        auto v = next();
        if (!v)
            return std::nullopt;
        return validate(*v, order_of(spec_.kind));
    }

    // Drains the remaining items into owned vectors.
    std::vector<std::vector<part_t>> collect()
    {
        std::vector<std::vector<part_t>> out;
        while (auto v = next())
            out.emplace_back(v->begin(), v->end());
        return out;
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::span<const part_t>;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(composition_stream* s) : s_(s) { advance(); }

        value_type operator*() const { return *cur_; }
        iterator& operator++()
        {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.cur_; }

    private:
        void advance() { cur_ = s_->next(); }

        composition_stream* s_ = nullptr;
        std::optional<std::span<const part_t>> cur_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() { return {}; }

private:
    generator_spec spec_;
    std::optional<coro::pull_type> source_;
    bool primed_ = false;
};

inline composition_stream stream(generator_spec spec)
{
    return composition_stream(spec);
}

// Every composition of the stream, copied.
inline std::vector<composition> materialize(generator_spec spec)
{
    std::vector<composition> out;
    composition_stream s(spec);
    while (auto c = s.next_composition())
        out.push_back(std::move(*c));
    return out;
}

} // namespace partgen
