#pragma once

#include <optional>
#include <string>

#include "gaussbs/csv.hpp"

namespace gaussbs {

// Sweep tables behind `gauss-bs figure`. Each id has fixed defaults; only the
// overrides listed below are accepted, anything else throws
// std::invalid_argument:
//   fig2   e_n and remaining two-mode depth vs theta   [lambda1_min, purity]
//   fig3   four-stage depletion sweep vs theta         [lambda1_min, purity]
//   fig4a  s_n and e_n vs theta for u in {1, .8, .5}   [lambda1_min]
//   fig4b  s_n and e_n vs 1/(2 lambda_min), theta=pi/4 []
//   fig5   n_in, n_out, s_n, e_n vs theta; second
//          input vacuum or thermal                     [lambda1_min, purity, n_thermal]
//   fig6   same columns, two pure nonclassical inputs  [lambda1_min, lambda2_min]
struct FigureRequest {
  std::string id;
  std::optional<double> lambda1_min;
  std::optional<double> lambda2_min;
  std::optional<double> n_thermal;
  std::optional<double> purity;
  int points = 201;
};

Table make_figure(const FigureRequest& request);

}  // namespace gaussbs
