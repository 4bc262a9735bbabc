var Animal = function (name) {
    this.name = name;
    this.describe = function() {
        return this.name + ', an animal';
    }
};

var animal = new Animal("pilou");

animal.name;       // answers 'pilou'
animal.describe()  // answers 'pilou, an animal'
