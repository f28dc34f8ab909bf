#include "catalog.hpp"

namespace foxh {

namespace {

HFunctionSpec make(int m, int n, std::vector<ParamPair> upper,
                   std::vector<ParamPair> lower) {
  HFunctionSpec s;
  s.m = m;
  s.n = n;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  return validate(std::move(s));
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"exp", make(1, 0, {}, {{{0.0, 0.0}, 1.0}})});
  entries.push_back({"exp_shifted", make(1, 0, {}, {{{0.5, 0.0}, 1.0}})});
  entries.push_back({"binom_basic",
                     make(1, 1, {{{0.0, 0.0}, 1.0}}, {{{0.0, 0.0}, 1.0}})});
  entries.push_back({"binom_shifted",
                     make(1, 1, {{{0.3, 0.0}, 1.0}}, {{{0.4, 0.0}, 1.0}})});
  entries.push_back({"h2112", make(2, 1, {{{0.2, 0.0}, 1.0}},
                                   {{{0.3, 0.0}, 1.0}, {{0.8, 0.0}, 1.0}})});
  entries.push_back(
      {"h2222", make(2, 2, {{{0.1, 0.0}, 1.0}, {{0.15, 0.0}, 1.0}},
                     {{{0.25, 0.0}, 1.0}, {{0.55, 0.0}, 1.0}})});
  entries.push_back({"exp_sqrt", make(1, 0, {}, {{{0.5, 0.0}, 2.0}})});
  entries.push_back({"binom_weights",
                     make(1, 1, {{{0.2, 0.0}, 0.7}}, {{{0.1, 0.0}, 1.3}})});
  entries.push_back({"h2112_complex",
                     make(2, 1, {{{0.2, 0.1}, 1.0}},
                          {{{0.3, 0.0}, 1.0}, {{0.7, -0.2}, 1.0}})});
  entries.push_back(
      {"h2222_weights", make(2, 2, {{{0.1, 0.0}, 0.5}, {{-0.2, 0.0}, 1.0}},
                             {{{0.3, 0.0}, 1.0}, {{0.6, 0.0}, 0.5}})});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

}  // namespace foxh
