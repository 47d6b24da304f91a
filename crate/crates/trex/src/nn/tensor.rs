pub struct Tensor;
