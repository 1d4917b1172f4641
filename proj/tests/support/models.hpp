#pragma once

// Reference models used across the test suites.
namespace ftloop::testing {

// Two gates in one ordinary loop.
inline constexpr const char* kTwoGateLoop = R"(basic Aa p=0.1
basic Ab p=0.1
basic Ba p=0.1
basic Bb p=0.1
gate A = Aa | (Ab & B)
gate B = Bb | (Ba & A)
top A
)";

// Same loop with Aa repairable.
inline constexpr const char* kTwoGateLoopRepairable = R"(basic Aa kind=repairable
basic Ab
basic Ba
basic Bb
gate A = Aa | (Ab & B)
gate B = Bb | (Ba & A)
top A
)";

// Four gates, every gate linearly coupled to the other three.
inline constexpr const char* kFourGateLinear = R"(basic Aa
basic Ab
basic Ac
basic Ad
basic Bb
basic Ba
basic Bc
basic Bd
basic Cc
basic Ca
basic Cb
basic Cd
basic Dd
basic Da
basic Db
basic Dc
gate A = Aa | (Ab & B) | (Ac & C) | (Ad & D)
gate B = Bb | (Ba & A) | (Bc & C) | (Bd & D)
gate C = Cc | (Ca & A) | (Cb & B) | (Cd & D)
gate D = Dd | (Da & A) | (Db & B) | (Dc & C)
top A, B, C, D
)";

// Three gates with products that mention two loop gates at once.
inline constexpr const char* kThreeGateNonLinear = R"(basic Aa
basic Ab
basic Ac
basic Abc
basic Bb
basic Ba
basic Bc
basic Bac
basic Cc
basic Ca
basic Cb
basic Cab
gate A = Aa | (Ab & B) | (Ac & C) | (Abc & B & C)
gate B = Bb | (Ba & A) | (Bc & C) | (Bac & A & C)
gate C = Cc | (Ca & A) | (Cb & B) | (Cab & A & B)
top A, B, C
)";

// Main equation of an ordinary loop: T0 = Q10 | (Q11 & T0).
inline constexpr const char* kSelfLoop = R"(basic Q10
basic Q11
gate T0 = Q10 | (Q11 & T0)
top T0
)";

// Two coupled gates with every coefficient as its own basic event.
inline constexpr const char* kTwoGateCoefficients = R"(basic Q10
basic Q11
basic Q12
basic Q13
basic Q20
basic Q21
basic Q22
basic Q23
gate A = Q10 | (Q11 & A) | (Q12 & B) | (Q13 & A & B)
gate B = Q20 | (Q21 & A) | (Q22 & B) | (Q23 & A & B)
top A, B
)";

// Two gates copying each other, no basic events.
inline constexpr const char* kSwap = R"(gate P = Q
gate Q = P
top P
)";

inline constexpr const char* kAcyclic = R"(basic e1 p=0.1
basic e2 p=0.1
basic e3 p=0.1
gate A = e1 | (e2 & e3)
top A
)";

}  // namespace ftloop::testing
