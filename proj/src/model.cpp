#include "zjack/model.hpp"

#include <cmath>
#include <cstring>

#include "zjack/errors.hpp"

namespace zjack {

Dataset Dataset::resampled(std::span<const std::size_t> indices) const {
  Dataset out(width_);
  out.reserve(indices.size());
  for (std::size_t i : indices) out.append(record(i));
  return out;
}

Dataset Dataset::without(std::size_t drop) const {
  Dataset out(width_);
  out.reserve(size() - 1);
  for (std::size_t i = 0; i < size(); ++i)
    if (i != drop) out.append(record(i));
  return out;
}

Dataset Dataset::permuted(std::span<const std::size_t> order) const {
  Dataset out(width_);
  out.reserve(order.size());
  for (std::size_t i : order) out.append(record(i));
  return out;
}

std::uint64_t Dataset::fingerprint() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (double v : d_) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xFFu;
      h *= 0x100000001B3ULL;
    }
  }
  return h;
}

void ZModel::add_moment_jacobian(std::span<const double> record,
                                 std::span<const double> theta, Matrix& acc) const {
  Matrix tmp(dim(), dim());
  moment_jacobian(record, theta, tmp);
  auto a = acc.data();
  auto t = tmp.data();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += t[i];
}

void ZModel::functional_hessian(std::span<const double>, Matrix&) const {
  throw contract_violation("model does not provide a functional Hessian");
}

void ZModel::moment_hessian_contract(std::span<const double>, std::span<const double>,
                                     std::span<const double>, Matrix&) const {
  throw contract_violation("model does not provide second moment derivatives");
}

void ZModel::validate_record(std::span<const double> record, std::size_t index) const {
  for (double v : record)
    if (!std::isfinite(v))
      throw contract_violation("non-finite entry in record " + std::to_string(index));
}

void validate_dataset(const ZModel& model, const Dataset& data) {
  if (data.width() != model.record_width())
    throw contract_violation("record width does not match model layout");
  if (data.size() < 2) throw contract_violation("dataset needs at least 2 records");
  for (std::size_t i = 0; i < data.size(); ++i) model.validate_record(data.record(i), i);
}

}  // namespace zjack
