#pragma once

#include <string_view>

namespace lieord::messages {

inline constexpr std::string_view kLevelTwoOnly =
    "This quality level is not available. Please set the quality level to 2.";
inline constexpr std::string_view kLevelOneOrTwo =
    "This quality level is not available. Please set the quality level to 1 or 2.";
inline constexpr std::string_view kLevelOneToThree =
    "This quality level is not available. Please set the quality level to 1, 2 or 3.";

inline constexpr std::string_view kPairsSecondRow =
    "This combination of quality levels is not available. Please set the quality levels to (2,1), (2,2) or (2,3).";
inline constexpr std::string_view kPairsTwoByTwo =
    "This combination of quality levels is not available. Please set the quality levels to (1,1), (1,2), (2,1) or "
    "(2,2).";
inline constexpr std::string_view kPairsTwoByThree =
    "This combination of quality levels is not available. Please set the quality levels to (1,1), (1,2), (1,3), "
    "(2,1), (2,2) or (2,3).";

inline constexpr std::string_view kTypeOneToFour =
    "This type is not available. Please set the type to 1, 2, 3 or 4.";

}  // namespace lieord::messages
