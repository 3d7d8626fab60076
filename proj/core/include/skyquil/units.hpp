#pragma once

namespace skyquil::units {

// Canonical internal units everywhere: USD, km, persons, flights/day.
// Reporting conversions (100 USD fares, 1000 km distances, $10,000 fixed
// costs, millions of persons) happen only at I/O boundaries.

inline constexpr double kDaysPerQuarter = 91.0;
inline constexpr double kLegsPerRoundTrip = 2.0;  // one frequency unit = one round trip
inline constexpr double kCruiseSpeedKmPerHour = 860.0;

// Emission factors
inline constexpr double kFlightFuelKgPer1000Km = 2500.0;  // per departure
inline constexpr double kPaxFuelKgPer1000Km = 2.5;        // marginal, per passenger
inline constexpr double kCo2KgPerFuelKg = 3.16;
inline constexpr double kSocialCostPerKgCo2 = 0.215;  // USD

// Capacity penalty (added to marginal cost when load approaches the cap)
inline constexpr double kLoadCap = 200.0;      // passengers per flight
inline constexpr double kPenaltyScale = 2.85;  // USD
inline constexpr double kPenaltySlope = 0.1;

// I/O scale factors
inline constexpr double kFareReportScale = 100.0;       // USD per reported fare unit
inline constexpr double kDistanceReportScale = 1000.0;  // km per reported distance unit
inline constexpr double kFixedCostReportScale = 1e4;    // USD per reported fixed-cost unit
inline constexpr double kPopulationReportScale = 1e6;   // persons per reported size unit

inline constexpr double kShortHaulMaxKm = 1500.0;

inline double flights_per_quarter(double daily_freq) {
    return daily_freq * kDaysPerQuarter * kLegsPerRoundTrip;
}

}  // namespace skyquil::units
