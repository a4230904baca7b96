// Benchmarks over the reference system: saturation, decision, certificate
// construction and counter-proof unfolding.
#include <benchmark/benchmark.h>

#include <string>

#include "apsproof/counterproof.hpp"
#include "apsproof/parser.hpp"
#include "apsproof/serialize.hpp"

namespace {

const char* kReferenceText =
    "Q(a x) <- U(x).\n"
    "Q(a x) <- V(x).\n"
    "R(a x) <- T(x).\n"
    "T(x).\n"
    "P(x) <- Q(x), R(x).\n"
    "P(x) <- S(x).\n"
    "Q(x) <- P(a x).\n";

aps::System reference() { return *aps::parse_system(kReferenceText).system; }

aps::Atom p_word(std::size_t len) {
  aps::Word w(len, "a");
  return aps::Atom{"P", std::move(w)};
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(aps::parse_system(kReferenceText));
  }
}
BENCHMARK(BM_Parse);

void BM_Saturate(benchmark::State& state) {
  aps::System base = reference();
  for (auto _ : state) {
    benchmark::DoNotOptimize(aps::saturate(base));
  }
}
BENCHMARK(BM_Saturate);

void BM_Complementation(benchmark::State& state) {
  aps::System automaton = aps::extract_automaton(aps::saturate(reference()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aps::complementation(automaton, "b"));
  }
}
BENCHMARK(BM_Complementation);

void BM_DecideFresh(benchmark::State& state) {
  aps::System automaton = aps::extract_automaton(aps::saturate(reference()));
  aps::SignedSystem ab = aps::complementation(automaton, "b");
  const aps::Atom atom = p_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    aps::DecisionSession session(automaton, ab);
    benchmark::DoNotOptimize(session.decide(atom));
  }
}
BENCHMARK(BM_DecideFresh)->Arg(2)->Arg(6)->Arg(10);

void BM_Refute(benchmark::State& state) {
  aps::System automaton = aps::extract_automaton(aps::saturate(reference()));
  aps::SignedSystem ab = aps::complementation(automaton, "b");
  const aps::Atom atom = p_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    aps::DecisionSession session(automaton, ab);
    benchmark::DoNotOptimize(session.refute(atom));
  }
}
BENCHMARK(BM_Refute)->Arg(2)->Arg(8);

void BM_Unfold(benchmark::State& state) {
  const aps::Atom atom = p_word(1);
  for (auto _ : state) {
    state.PauseTiming();
    aps::UnfoldContext ctx = aps::make_unfold_context(reference());
    state.ResumeTiming();
    benchmark::DoNotOptimize(
        aps::unfold(ctx, atom, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Unfold)->Arg(4)->Arg(8)->Arg(12);

void BM_SerializeCertificate(benchmark::State& state) {
  aps::UnfoldContext ctx = aps::make_unfold_context(reference());
  aps::Proof prefix = aps::unfold(ctx, p_word(1), 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aps::certificate_to_json(prefix, "0123456789abcdef"));
  }
}
BENCHMARK(BM_SerializeCertificate);

}  // namespace

BENCHMARK_MAIN();
