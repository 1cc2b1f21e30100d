#include "maxmin/apps.hpp"

namespace maxmin {

// Mean January/July values (2013-2018) of high temperature, radiation and
// evapotranspiration for 16 Andalusian sites. Kept in sync with
// data/andalusia_climate.csv by a unit test.
const GeoDataset& andalusia_fixture() {
  static const GeoDataset fixture{
      {"Sanlúcar", "Moguer", "Lepe", "Conil", "El Puerto", "Estepona",
       "Málaga", "Vélez", "Almuñécar", "Adra", "Almería", "Aroche",
       "Córdoba", "Baza", "Bélmez", "S. Yeguas"},
      {{15.959, 9.572, 1.520},
       {16.698, 9.272, 0.925},
       {16.659, 9.503, 1.242},
       {16.322, 9.940, 1.331},
       {16.504, 9.767, 1.625},
       {16.908, 10.194, 1.773},
       {17.663, 9.968, 1.606},
       {18.204, 9.819, 1.905},
       {17.733, 10.247, 1.404},
       {17.784, 10.198, 1.637},
       {17.468, 10.068, 1.561},
       {16.477, 9.797, 1.434},
       {14.871, 8.952, 1.149},
       {13.386, 8.303, 3.054},
       {13.150, 8.216, 1.215},
       {13.656, 9.155, 1.247}},
      {{30.086, 27.758, 6.103},
       {30.424, 27.751, 5.222},
       {30.610, 28.297, 6.836},
       {28.913, 26.669, 5.596},
       {31.052, 28.216, 6.829},
       {31.233, 27.298, 6.246},
       {32.358, 27.528, 6.378},
       {31.912, 26.534, 5.911},
       {29.684, 25.370, 4.952},
       {28.929, 26.463, 5.143},
       {30.342, 27.335, 5.793},
       {34.616, 27.806, 6.270},
       {36.375, 28.503, 7.615},
       {35.754, 27.824, 1.673},
       {35.272, 28.478, 7.400},
       {33.660, 28.727, 7.825}}};
  return fixture;
}

}  // namespace maxmin
