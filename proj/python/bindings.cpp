#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "pilift/builtins.hpp"
#include "pilift/pi_theory.hpp"
#include "pilift/verification.hpp"

namespace py = pybind11;
using namespace pilift;

namespace {

// Results cross the boundary as JSON text; the Python layer decodes them.
class Context {
 public:
  explicit Context(Group g) : ctx_(std::make_unique<GroupContext>(std::move(g))) {}

  const GroupContext& get() const { return *ctx_; }

  std::string character_table() const {
    py::gil_scoped_release release;
    return ctx_->table(ctx_->whole()).to_json().dump();
  }

  std::string ipi(const std::string& pi) const {
    const auto pa = analyzer(PrimeSet::parse(pi));
    py::gil_scoped_release release;
    return pa->partial_table_json(ctx_->whole()).dump();
  }

  std::vector<std::size_t> lifts(const std::string& pi, std::size_t member) const {
    const auto pa = analyzer(PrimeSet::parse(pi));
    py::gil_scoped_release release;
    if (member >= pa->ipi(ctx_->whole()).members.size()) throw py::index_error("no such partial character");
    return pa->lifts_of(ctx_->whole(), member);
  }

  bool pi_separable(const std::string& pi) const { return is_pi_separable(ctx_->top(), PrimeSet::parse(pi)).separable; }

 private:
  // Called with the GIL held, which serializes replacement of the cache.
  std::shared_ptr<const PiAnalyzer> analyzer(const PrimeSet& p) const {
    if (!pa_ || pa_->pi() != p) pa_ = std::make_shared<const PiAnalyzer>(*ctx_, p);
    return pa_;
  }

  std::unique_ptr<GroupContext> ctx_;
  mutable std::shared_ptr<const PiAnalyzer> pa_;
};

std::string section4() {
  py::gil_scoped_release release;
  GroupContext ctx(builtin::section4_group());
  return section4_report(ctx).to_json(ctx).dump();
}

std::string verify(std::optional<std::vector<std::string>> groups, std::optional<std::string> pi, std::size_t jobs,
                   std::size_t series_cap, std::size_t frobenius_triples, std::uint64_t seed) {
  std::vector<CorpusEntry> corpus;
  if (groups) {
    for (const auto& name : *groups) {
      const Group g = builtin::by_name(name);
      corpus.push_back({name, [g] { return g; }, {}});
    }
  } else {
    corpus = default_corpus();
  }
  if (pi) {
    const PrimeSet p = PrimeSet::parse(*pi);
    for (auto& c : corpus) c.pis = {p};
  }
  SuiteOptions opt;
  opt.series_cap = series_cap;
  opt.frobenius_triples = frobenius_triples;
  opt.seed = seed;
  py::gil_scoped_release release;
  return run_corpus(corpus, opt, jobs).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);
  py::register_exception<AnomalyError>(m, "AnomalyError", PyExc_RuntimeError);

  py::class_<Context>(m, "Context")
      .def_static("builtin", [](const std::string& name) { return std::make_unique<Context>(builtin::by_name(name)); })
      .def_static("from_perm_text",
                  [](const std::string& text) { return std::make_unique<Context>(parse_perm_text(text)); })
      .def_property_readonly("order", [](const Context& c) { return c.get().top().order(); })
      .def_property_readonly("degree", [](const Context& c) { return c.get().top().degree(); })
      .def_property_readonly("class_count",
                             [](const Context& c) { return c.get().table(c.get().whole()).size(); })
      .def("character_table", &Context::character_table)
      .def("ipi", &Context::ipi, py::arg("pi"))
      .def("lifts", &Context::lifts, py::arg("pi"), py::arg("member"))
      .def("pi_separable", &Context::pi_separable, py::arg("pi"));

  m.def("builtin_names", &builtin::names);
  m.def("section4", &section4);
  m.def("verify", &verify, py::arg("groups") = py::none(), py::arg("pi") = py::none(), py::arg("jobs") = 1,
        py::arg("series_cap") = kDefaultSeriesCap, py::arg("frobenius_triples") = 8, py::arg("seed") = 1);
}
