#include "secn/activation.hpp"

#include <cmath>

#include "secn/errors.hpp"

namespace secn {

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double activate(double x, Activation kind) {
  switch (kind) {
    case Activation::kIdentity:
      return x;
    case Activation::kRelu:
      return x > 0.0 ? x : 0.0;
    case Activation::kSigmoid:
      return sigmoid(x);
  }
  return x;
}

double activate_derivative(double x, Activation kind) {
  switch (kind) {
    case Activation::kIdentity:
      return 1.0;
    case Activation::kRelu:
      return x > 0.0 ? 1.0 : 0.0;
    case Activation::kSigmoid: {
      const double s = sigmoid(x);
      return s * (1.0 - s);
    }
  }
  return 1.0;
}

const char* activation_name(Activation kind) {
  switch (kind) {
    case Activation::kIdentity:
      return "identity";
    case Activation::kRelu:
      return "relu";
    case Activation::kSigmoid:
      return "sigmoid";
  }
  return "identity";
}

Activation activation_from_name(const std::string& name) {
  if (name == "identity") return Activation::kIdentity;
  if (name == "relu") return Activation::kRelu;
  if (name == "sigmoid") return Activation::kSigmoid;
  throw ConfigError("unknown activation '" + name + "' (expected identity|relu|sigmoid)");
}

}  // namespace secn
