#pragma once

#include <string>

namespace secn {

enum class Activation { kIdentity, kRelu, kSigmoid };

// Numerically stable logistic function; never overflows, stays in (0,1) for finite x.
double sigmoid(double x);

double activate(double x, Activation kind);

// Derivative of activate(x, kind) at x. relu uses 0 at the kink.
double activate_derivative(double x, Activation kind);

const char* activation_name(Activation kind);
Activation activation_from_name(const std::string& name);

}  // namespace secn
