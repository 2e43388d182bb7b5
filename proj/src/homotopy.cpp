#include "khoform/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace khoform {

HomotopyType::HomotopyType(std::vector<int> dims) : dims_(std::move(dims)) {
  std::sort(dims_.begin(), dims_.end(), std::greater<>());
  for (int d : dims_)
    if (d < -1) throw std::invalid_argument("sphere dimension below -1");
  if (dims_.size() > 1 && dims_.back() == -1)
    throw WedgeError("S^-1 cannot be a wedge summand");
}

HomotopyType HomotopyType::wedge_of(std::vector<int> dims) {
  if (dims.empty()) throw std::invalid_argument("wedge needs at least one sphere");
  return HomotopyType(std::move(dims));
}

int HomotopyType::max_dim() const {
  if (dims_.empty()) throw std::logic_error("contractible has no dimension");
  return dims_.front();
}

int HomotopyType::min_dim() const {
  if (dims_.empty()) throw std::logic_error("contractible has no dimension");
  return dims_.back();
}

std::string HomotopyType::to_string() const {
  if (dims_.empty()) return "contractible";
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << " v ";
    os << "S^" << dims_[i];
  }
  return os.str();
}

std::string HomotopyType::to_json() const {
  nlohmann::json j;
  if (dims_.empty()) {
    j["type"] = "contractible";
  } else {
    j["type"] = "wedge";
    j["dims"] = dims_;
  }
  return j.dump();
}

HomotopyType HomotopyType::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("type") == "contractible") return contractible();
  return wedge_of(j.at("dims").get<std::vector<int>>());
}

HomotopyType suspend(const HomotopyType& h, int times) {
  if (times < 0) throw std::invalid_argument("negative suspension count");
  if (h.is_contractible() || times == 0) return h;
  std::vector<int> dims = h.dims();
  for (int& d : dims) d += times;
  return HomotopyType::wedge_of(std::move(dims));
}

HomotopyType wedge(const HomotopyType& a, const HomotopyType& b) {
  if (a.is_contractible()) return b;
  if (b.is_contractible()) return a;
  if (a.is_empty_complex() || b.is_empty_complex())
    throw WedgeError("cannot wedge S^-1 with " +
                     (a.is_empty_complex() ? b : a).to_string());
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return HomotopyType::wedge_of(std::move(dims));
}

HomotopyType join(const HomotopyType& a, const HomotopyType& b) {
  if (a.is_contractible() || b.is_contractible()) return HomotopyType::contractible();
  std::vector<int> dims;
  for (int x : a.dims())
    for (int y : b.dims()) dims.push_back(x + y + 1);
  return HomotopyType::wedge_of(std::move(dims));
}

bool has_four_braid_shape(const HomotopyType& h) {
  const auto& d = h.dims();  // descending
  switch (d.size()) {
    case 0:
    case 1:
    case 2:
      return true;
    case 3:
      return d[1] == d[2];
    case 4:
      return d[1] == d[2] && d[2] == d[3];
    default:
      return false;
  }
}

}  // namespace khoform
