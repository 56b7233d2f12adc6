#include <benchmark/benchmark.h>

#include <random>

#include "kaj/cipher.hpp"
#include "kaj/codec.hpp"
#include "kaj/cryptanalysis.hpp"

namespace {

kaj::Bytes make_message(std::size_t n) {
  std::mt19937_64 rng(n);
  kaj::Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

void BM_Encrypt(benchmark::State& state) {
  const auto message = make_message(static_cast<std::size_t>(state.range(0)));
  const kaj::CipherParams params(3, 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kaj::encrypt(message, params));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Encrypt)->RangeMultiplier(4)->Range(16, 1024);

void BM_Decrypt(benchmark::State& state) {
  const auto message = make_message(static_cast<std::size_t>(state.range(0)));
  const auto encrypted = kaj::encrypt(message, kaj::CipherParams(3, 500));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kaj::decrypt(encrypted.ciphertext, encrypted.key));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decrypt)->RangeMultiplier(4)->Range(16, 1024);

void BM_Crack(benchmark::State& state) {
  const auto message = make_message(static_cast<std::size_t>(state.range(0)));
  const auto ct = kaj::encrypt(message, kaj::CipherParams(2, 500)).ciphertext;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kaj::crack(ct));
  }
}
BENCHMARK(BM_Crack)->Arg(11)->Arg(64)->Arg(256);

void BM_SerializeParse(benchmark::State& state) {
  const auto message = make_message(static_cast<std::size_t>(state.range(0)));
  const auto encrypted = kaj::encrypt(message, kaj::CipherParams(3, 500));
  for (auto _ : state) {
    auto text = kaj::serialize_key(encrypted.key);
    benchmark::DoNotOptimize(kaj::parse_key(text));
  }
}
BENCHMARK(BM_SerializeParse)->Arg(64)->Arg(1024);

}  // namespace
