#include "fraclab/quadrature.hpp"

namespace fraclab::detail {

const GLPoint kGL8[8] = {
    {-0.96028985649753623168, 0.10122853629037625915},
    {-0.79666647741362673959, 0.22238103445337447054},
    {-0.52553240991632898582, 0.31370664587788728734},
    {-0.18343464249564980494, 0.36268378337836198297},
    {0.18343464249564980494, 0.36268378337836198297},
    {0.52553240991632898582, 0.31370664587788728734},
    {0.79666647741362673959, 0.22238103445337447054},
    {0.96028985649753623168, 0.10122853629037625915},
};

const GLPoint kGL16[16] = {
    {-0.9894009349916499326, 0.027152459411754094852},
    {-0.94457502307323257608, 0.062253523938647892863},
    {-0.86563120238783174388, 0.09515851168249278481},
    {-0.7554044083550030339, 0.12462897125553387205},
    {-0.61787624440264374845, 0.14959598881657673208},
    {-0.45801677765722738634, 0.16915651939500253819},
    {-0.28160355077925891323, 0.18260341504492358887},
    {-0.095012509837637440185, 0.18945061045506849629},
    {0.095012509837637440185, 0.18945061045506849629},
    {0.28160355077925891323, 0.18260341504492358887},
    {0.45801677765722738634, 0.16915651939500253819},
    {0.61787624440264374845, 0.14959598881657673208},
    {0.7554044083550030339, 0.12462897125553387205},
    {0.86563120238783174388, 0.09515851168249278481},
    {0.94457502307323257608, 0.062253523938647892863},
    {0.9894009349916499326, 0.027152459411754094852},
};

}  // namespace fraclab::detail
