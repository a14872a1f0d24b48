#pragma once

#include <string>

#include "cpoly/chain.hpp"
#include "cpoly/dissect.hpp"

namespace cpoly {

/// cpfig/1: text figure format.  The loader redistributes a small closure
/// residual into segment lengths (least squares) and validates.
ConvexChain read_figure(const std::string& text, const Tolerance& t = {});
std::string write_figure(const ConvexChain& c);

/// Parse without validating (for inspection of broken files).
ConvexChain read_figure_raw(const std::string& text);

ConvexChain load_figure_file(const std::string& path, const Tolerance& t = {});
void save_figure_file(const std::string& path, const ConvexChain& c);

/// cpdis/1: dissection certificate format; verify() consumes exactly what
/// this writes.
Dissection read_dissection(const std::string& text, const Tolerance& t = {});
std::string write_dissection(const Dissection& d);

Dissection load_dissection_file(const std::string& path,
                                const Tolerance& t = {});
void save_dissection_file(const std::string& path, const Dissection& d);

}  // namespace cpoly
