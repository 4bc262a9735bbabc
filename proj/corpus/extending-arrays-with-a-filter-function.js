Array.prototype.filter = function (criteria){
    newArray = new Array();
    for (var i = 0; i < this.length; i++) {
        if (criteria(this[i]))
            newArray.push(this[i]);
    }
    return newArray;
}

var isEven = function(elem) { return (elem % 2 == 0); };
var array = new Array(9, 58, 42, 12, 1001, 1000);
array.filter(isEven); // answers [58, 42, 12, 1000]
