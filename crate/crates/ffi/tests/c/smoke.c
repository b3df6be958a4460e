#include <math.h>
#include <stdio.h>

#include "cerenkov.h"

#define CHECK(cond)                                          \
    do {                                                     \
        if (!(cond)) {                                       \
            fprintf(stderr, "line %d: %s\n", __LINE__, #cond); \
            return 1;                                        \
        }                                                    \
    } while (0)

int main(void) {
    CrkMedium *medium = NULL;
    CrkParticle *particle = NULL;
    double power = 0.0, theta = 0.0, weber = 0.0;

    CHECK(crk_medium_new(2.0, 1.0, &medium) == CRK_STATUS_OK);
    CHECK(crk_particle_new(1.0, 0.99, &particle) == CRK_STATUS_OK);
    CHECK(crk_power_2d_closed(medium, particle, false, CRK_UNITS_REDUCED, &power) == CRK_STATUS_OK);
    CHECK(fabs(power - 0.137365006571627) < 1e-12);
    CHECK(crk_cone_angle(medium, particle, &theta) == CRK_STATUS_OK);
    CHECK(crk_weber_integral(5.0, 3.0, 1e-10, &weber, NULL) == CRK_STATUS_OK);
    CHECK(fabs(weber - 0.25) < 1e-9);

    CHECK(crk_weber_integral(2.0, 2.0, 1e-10, &weber, NULL) == CRK_STATUS_DIVERGENT);
    CHECK(crk_last_error() != NULL);
    CHECK(crk_medium_new(-1.0, 1.0, NULL) == CRK_STATUS_INVALID_ARGUMENT);

    crk_particle_free(particle);
    crk_medium_free(medium);
    printf("ok %s\n", crk_version());
    return 0;
}
