// Copyright 2026 The fogplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * \file fogplace/common.hpp
 *
 * \brief Identifier types, error hierarchy and small text helpers shared by
 *  every module.
 */

#ifndef FOGPLACE_COMMON_HPP
#define FOGPLACE_COMMON_HPP

#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace fogplace {

/// Integer identifier tagged by what it identifies, so a node id can never be
/// passed where a link id is expected.
template <typename Tag>
struct Id
{
	std::uint32_t value = 0;

	constexpr Id() = default;
	constexpr explicit Id(std::uint32_t v) : value(v) {}
	constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
	constexpr explicit Id(int v) : value(static_cast<std::uint32_t>(v)) {}

	constexpr std::size_t index() const { return value; }

	friend constexpr auto operator<=>(Id, Id) = default;
};

struct NodeTag;
struct LinkTag;
struct DeviceTag;
struct WorkloadTag;

using NodeId = Id<NodeTag>;
using LinkId = Id<LinkTag>;
using DeviceId = Id<DeviceTag>;
using WorkloadId = Id<WorkloadTag>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Ordered list of links from one endpoint to the other.
using Path = std::vector<LinkId>;

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

class InvalidParameterError : public Error { public: using Error::Error; };
class NoPathError : public Error { public: using Error::Error; };
class InfeasibleAssignmentError : public Error { public: using Error::Error; };
/// Regular traffic saturating a link, inconsistent weights, malformed data.
class InstanceInvalidError : public Error { public: using Error::Error; };
/// Node-local workloads do not fit their home location. Distinct from
/// blocking, which only real-time workloads may incur.
class InstanceInfeasibleError : public Error { public: using Error::Error; };
class InfeasibleModelError : public Error { public: using Error::Error; };
class TimeoutError : public Error { public: using Error::Error; };
class InstanceTooLargeError : public Error { public: using Error::Error; };
class NegativeTrafficError : public Error { public: using Error::Error; };
class UnvalidatedSolutionError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

namespace text {

/// Shortest decimal text that reads back to exactly the same double.
inline std::string format_double(double v)
{
	char buf[64];
	auto res = std::to_chars(buf, buf + sizeof(buf), v);
	return std::string(buf, res.ptr);
}

/// Fixed-point text, for human-facing tables.
inline std::string format_fixed(double v, int precision)
{
	char buf[64];
	auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
	return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s)
{
	double v = 0;
	auto res = std::from_chars(s.data(), s.data() + s.size(), v);
	if (res.ec != std::errc() || res.ptr != s.data() + s.size())
	{
		throw ParseError("not a number: '" + std::string(s) + "'");
	}
	return v;
}

inline long long parse_int(std::string_view s)
{
	long long v = 0;
	auto res = std::from_chars(s.data(), s.data() + s.size(), v);
	if (res.ec != std::errc() || res.ptr != s.data() + s.size())
	{
		throw ParseError("not an integer: '" + std::string(s) + "'");
	}
	return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
	std::vector<std::string_view> out;
	std::size_t start = 0;
	for (std::size_t i = 0; i <= s.size(); ++i)
	{
		if (i == s.size() || s[i] == sep)
		{
			out.push_back(s.substr(start, i - start));
			start = i + 1;
		}
	}
	return out;
}

inline std::string_view trim(std::string_view s)
{
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
	{
		s.remove_prefix(1);
	}
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
	{
		s.remove_suffix(1);
	}
	return s;
}

} // namespace text

} // namespace fogplace

template <typename Tag>
struct std::hash<fogplace::Id<Tag>>
{
	std::size_t operator()(fogplace::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

#endif // FOGPLACE_COMMON_HPP
